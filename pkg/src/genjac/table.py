"""Column tables emitted by the command line tools.

CSV layout: one ``# {json meta}`` comment line, a header of column names,
then rows.  Floats are written with 17 significant digits so that reading
the file back gives the same binary64 values.  JSON layout is
``{"meta": ..., "columns": [{"name", "unit"}], "rows": [[...]]}``.
"""

import csv
import io
import json
import math

__all__ = ["OutputTable", "read_csv", "read_json"]


def _fmt(v):
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def _finite(v):
    return isinstance(v, str) or math.isfinite(v)


class OutputTable:
    """Rows of a fixed set of columns plus a metadata dictionary.

    Rows containing NaN or infinities are not stored; ``dropped`` counts
    them and is mirrored into the metadata on output.
    """

    def __init__(self, columns, meta=None):
        self.columns = [(str(n), str(u)) for n, u in columns]
        self.rows = []
        self.meta = dict(meta or {})
        self.dropped = 0

    @property
    def names(self):
        return [n for n, _ in self.columns]

    def add_row(self, row):
        row = tuple(v if isinstance(v, str) else float(v) for v in row)
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} entries, expected {len(self.columns)}")
        if all(_finite(v) for v in row):
            self.rows.append(row)
            return True
        self.dropped += 1
        return False

    def column(self, name):
        i = self.names.index(name)
        return [r[i] for r in self.rows]

    def full_meta(self):
        m = dict(self.meta)
        m["dropped_rows"] = self.dropped
        m["units"] = {n: u for n, u in self.columns}
        return m

    def to_csv(self):
        buf = io.StringIO()
        buf.write("# " + json.dumps(self.full_meta(), sort_keys=True) + "\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.names)
        for r in self.rows:
            w.writerow([_fmt(v) for v in r])
        return buf.getvalue()

    def to_json(self):
        doc = {
            "meta": self.full_meta(),
            "columns": [{"name": n, "unit": u} for n, u in self.columns],
            "rows": [list(r) for r in self.rows],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def render(self, fmt):
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def _parse(v):
    try:
        return float(v)
    except ValueError:
        return v


def read_csv(text):
    """Inverse of :meth:`OutputTable.to_csv`."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise ValueError("missing metadata line")
    meta = json.loads(lines[0][2:])
    rd = csv.reader(lines[1:])
    names = next(rd)
    units = meta.pop("units", {})
    dropped = meta.pop("dropped_rows", 0)
    t = OutputTable([(n, units.get(n, "")) for n in names], meta)
    t.rows = [tuple(_parse(v) for v in r) for r in rd]
    t.dropped = dropped
    return t


def read_json(text):
    doc = json.loads(text)
    meta = dict(doc["meta"])
    meta.pop("units", None)
    dropped = meta.pop("dropped_rows", 0)
    t = OutputTable([(c["name"], c["unit"]) for c in doc["columns"]], meta)
    t.rows = [tuple(r) for r in doc["rows"]]
    t.dropped = dropped
    return t
