import numpy as np
import pytest

import entrokit as ek


class TestCSV:
    def test_header_and_named_column(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("t,x\n0,1.0\n1,2.0\n")
        assert np.array_equal(ek.ingest(p, "csv", column="x"), [1.0, 2.0])

    def test_headerless_indexed_column(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("0,1.5\n1,2.5\n2,3.5\n")
        assert np.array_equal(ek.ingest(p, "csv", column=1), [1.5, 2.5, 3.5])

    def test_malformed_row_names_line(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("x\n1.0\noops\n3.0\n")
        with pytest.raises(ek.IngestError) as exc:
            ek.ingest(p, "csv", column=0)
        assert exc.value.line == 3

    def test_missing_column_names_line(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("a,b\n1,2\n3\n")
        with pytest.raises(ek.IngestError) as exc:
            ek.ingest(p, "csv", column=1)
        assert exc.value.line == 3

    def test_unknown_column_name(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("a,b\n1,2\n")
        with pytest.raises(ek.IngestError):
            ek.ingest(p, "csv", column="c")

    def test_non_finite_rejected(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text("x\n1.0\ninf\n")
        with pytest.raises(ek.IngestError) as exc:
            ek.ingest(p, "csv", column="x")
        assert exc.value.line == 3

    def test_quoted_fields(self, tmp_path):
        p = tmp_path / "d.csv"
        p.write_text('"name","val"\n"a, b",3.5\n')
        assert np.array_equal(ek.ingest(p, "csv", column="val"), [3.5])


class TestRawF64:
    def test_roundtrip(self, tmp_path):
        p = tmp_path / "d.f64"
        data = np.array([1.5, -2.25, 3.125])
        data.astype("<f8").tofile(p)
        assert np.array_equal(ek.ingest(p, "raw-f64"), data)

    def test_empty_rejected(self, tmp_path):
        p = tmp_path / "d.f64"
        p.write_bytes(b"")
        with pytest.raises(ek.IngestError):
            ek.ingest(p, "raw-f64")


class TestPGM:
    def test_grayscale_rescaled_to_unit_interval(self, tmp_path):
        from PIL import Image

        arr = np.arange(12, dtype=np.uint8).reshape(3, 4) * 20
        p = tmp_path / "img.pgm"
        Image.fromarray(arr, mode="L").save(p)
        out = ek.ingest(p, "pgm")
        assert out.shape == (3, 4)
        assert out.min() >= 0.0 and out.max() <= 1.0
        assert np.allclose(out, arr / 255.0)

    def test_feeds_spatial_pipeline(self, tmp_path):
        from PIL import Image

        rng = np.random.default_rng(0)
        arr = rng.integers(0, 255, (16, 16), dtype=np.uint8)
        p = tmp_path / "img.pgm"
        Image.fromarray(arr, mode="L").save(p)
        img = ek.ingest(p, "pgm")
        r = ek.information_normalized(
            ek.Shannon(), ek.RelativeAmount(), ek.SpatialOrdinalPatterns(), img
        )
        assert 0.0 <= r.value <= 1.0


def test_unknown_format():
    with pytest.raises(ek.IngestError):
        ek.ingest("whatever", "parquet")
