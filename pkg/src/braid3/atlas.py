"""
Enumeration of transversally non-simple 3-braid pairs up to a braid crossing bound.

Pipeline: enumerate admissible negative-flype triples, collapse each conjugate triple orbit
to its canonical member, pair every class with the class across its flype, then check
each pair (distinct conjugacy classes, equal fingerprints, equal self-linking) and group by
fingerprint. Problems become row flags; nothing is dropped silently.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import logging
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .flype import (
    FlypeTriple,
    bennequin,
    braid_crossing_number,
    canonical_rep,
    flype_partner,
    flype_word,
    is_admissible,
    lemma1_orbit,
    readings_disagree,
)
from .garside import conjugate_test
from .invariants import Fingerprint, fingerprint
from .laurent import LaurentPolynomial
from .words import self_linking

log = logging.getLogger(__name__)

MIN_CROSSINGS = 7
DEFAULT_CROSSING_GUARD = 16
WORKERS_ENV = "BRAID3_WORKERS"

FLAG_CONJUGATE = "classes-conjugate"
FLAG_FINGERPRINT = "fingerprint-mismatch"
FLAG_BENNEQUIN = "self-linking-mismatch"
FLAG_NOT_ADMISSIBLE = "not-admissible"
FLAG_COLLISION = "fingerprint-collision"
FLAG_READINGS = "admissibility-readings-disagree"


@dataclasses.dataclass(frozen=True)
class AtlasRow:
    class1: FlypeTriple
    class2: FlypeTriple
    orbit1: tuple[FlypeTriple, ...]
    orbit2: tuple[FlypeTriple, ...]
    beta: int
    cb: int
    fingerprint: Fingerprint
    distinct_classes: bool
    name: Optional[str] = None
    flags: tuple[str, ...] = ()

    def sort_key(self):
        return (self.cb, self.beta, self.class1.as_tuple())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "beta": self.beta,
            "cb": self.cb,
            "class1": str(self.class1),
            "class2": str(self.class2),
            "orbit1": [str(t) for t in self.orbit1],
            "orbit2": [str(t) for t in self.orbit2],
            "fingerprint": self.fingerprint.to_dict(),
            "fingerprint_id": self.fingerprint.id,
            "distinct_classes": self.distinct_classes,
            "flags": list(self.flags),
        }

    @classmethod
    def from_dict(cls, data: dict) -> AtlasRow:
        return cls(
            class1=FlypeTriple.parse(data["class1"]),
            class2=FlypeTriple.parse(data["class2"]),
            orbit1=tuple(FlypeTriple.parse(s) for s in data["orbit1"]),
            orbit2=tuple(FlypeTriple.parse(s) for s in data["orbit2"]),
            beta=data["beta"],
            cb=data["cb"],
            fingerprint=Fingerprint.from_dict(data["fingerprint"]),
            distinct_classes=data["distinct_classes"],
            name=data["name"],
            flags=tuple(data["flags"]),
        )


def enumerate_admissible(cb_max: int) -> list[FlypeTriple]:
    if cb_max < MIN_CROSSINGS:
        raise ValueError(f"no admissible triple has fewer than {MIN_CROSSINGS + 1} crossings; got {cb_max}")
    total = cb_max - 1
    found = []
    for u in range(-total, total + 1):
        for v in range(-(total - abs(u)), total - abs(u) + 1):
            rest = total - abs(u) - abs(v)
            for w in range(-rest, rest + 1):
                t = FlypeTriple(u, v, w)
                if is_admissible(t):
                    found.append(t)
    found.sort(key=lambda t: (braid_crossing_number(t), t.as_tuple()))
    return found


def class_pairs(cb_max: int) -> list[tuple[FlypeTriple, FlypeTriple]]:
    """Unordered pairs of canonical class representatives related by a flype."""
    pairs = set()
    for t in enumerate_admissible(cb_max):
        a, b = canonical_rep(t), canonical_rep(flype_partner(t))
        pairs.add(tuple(sorted((a, b), key=_class_order)))
    return sorted(pairs, key=lambda p: _class_order(p[0]))


def _class_order(t: FlypeTriple):
    return (braid_crossing_number(t), t.as_tuple())


def reading_disagreements(cb_max: int) -> list[FlypeTriple]:
    """Triples within the bound on which the two admissibility readings differ."""
    total = cb_max - 1
    out = []
    for u in range(-total, total + 1):
        for v in range(-(total - abs(u)), total - abs(u) + 1):
            rest = total - abs(u) - abs(v)
            for w in range(-rest, rest + 1):
                t = FlypeTriple(u, v, w)
                if readings_disagree(t):
                    out.append(t)
    return out


def _check_pair(pair: tuple[FlypeTriple, FlypeTriple]) -> AtlasRow:
    a, b = pair
    wa, wb = flype_word(a), flype_word(b)
    flags = []
    if not (is_admissible(a) and is_admissible(b)):
        flags.append(FLAG_NOT_ADMISSIBLE)
    if readings_disagree(a) or readings_disagree(b):
        flags.append(FLAG_READINGS)
    distinct = not conjugate_test(wa, wb)
    if not distinct:
        flags.append(FLAG_CONJUGATE)
    fa, fb = fingerprint(wa), fingerprint(wb)
    if fa != fb:
        flags.append(FLAG_FINGERPRINT)
    beta = bennequin(a)
    if not (beta == bennequin(b) == self_linking(wa) == self_linking(wb)):
        flags.append(FLAG_BENNEQUIN)
    return AtlasRow(
        class1=a,
        class2=b,
        orbit1=lemma1_orbit(a),
        orbit2=lemma1_orbit(b),
        beta=beta,
        cb=min(braid_crossing_number(a), braid_crossing_number(b)),
        fingerprint=fa,
        distinct_classes=distinct,
        flags=tuple(flags),
    )


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "0")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ValueError("worker count must be >= 0")
    return workers or (os.cpu_count() or 1)


def build_atlas(cb_max: int, workers: Optional[int] = None,
                crossing_guard: int = DEFAULT_CROSSING_GUARD) -> list[AtlasRow]:
    if cb_max > crossing_guard:
        raise ValueError(f"cb_max {cb_max} exceeds the crossing guard {crossing_guard}")
    pairs = class_pairs(cb_max)
    n_workers = min(resolve_workers(workers), max(len(pairs), 1))
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            rows = list(pool.map(_check_pair, pairs))
    else:
        rows = [_check_pair(p) for p in pairs]

    by_fp: dict[tuple, list[int]] = defaultdict(list)
    for i, row in enumerate(rows):
        by_fp[row.fingerprint.key()].append(i)
    for indices in by_fp.values():
        if len(indices) > 1:
            for i in indices:
                rows[i] = dataclasses.replace(rows[i], flags=rows[i].flags + (FLAG_COLLISION,))
    for row in rows:
        if row.flags:
            log.warning("atlas row %s / %s flagged: %s", row.class1, row.class2, ", ".join(row.flags))
    return sorted(rows, key=AtlasRow.sort_key)


# ---- Table 1 fixture -----------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class FixtureRow:
    name: str
    beta: int
    cb: int
    triple1: FlypeTriple
    triple2: FlypeTriple


@dataclasses.dataclass(frozen=True)
class Deviation:
    name: str
    field: str
    printed: FlypeTriple
    expected: FlypeTriple
    note: str


@dataclasses.dataclass(frozen=True)
class Table1Fixture:
    rows: tuple[FixtureRow, ...]
    deviations: tuple[Deviation, ...]


def load_table1() -> Table1Fixture:
    raw = json.loads(resources.files("braid3.data").joinpath("table1.json").read_text())
    rows = tuple(
        FixtureRow(r["name"], r["beta"], r["cb"], FlypeTriple(*r["triple1"]), FlypeTriple(*r["triple2"]))
        for r in raw["rows"]
    )
    deviations = tuple(
        Deviation(d["name"], d["field"], FlypeTriple(*d["printed"]), FlypeTriple(*d["expected"]), d["note"])
        for d in raw["known_deviations"]
    )
    return Table1Fixture(rows, deviations)


@dataclasses.dataclass(frozen=True)
class RowCheck:
    name: str
    beta: int
    cb: int
    status: str  # PASS, FLAGGED or FAIL
    detail: str
    matched: Optional[AtlasRow] = None


@dataclasses.dataclass(frozen=True)
class Table1Report:
    checks: tuple[RowCheck, ...]
    expected_rows: int
    atlas_rows: int
    unmatched_atlas_rows: tuple[AtlasRow, ...]

    @property
    def ok(self) -> bool:
        return (self.expected_rows == self.atlas_rows
                and not self.unmatched_atlas_rows
                and all(c.status != "FAIL" for c in self.checks))

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            out.append(f"{c.status:<7} {c.name:<8} beta={c.beta:>3} cb={c.cb:>2}  {c.detail}")
        for row in self.unmatched_atlas_rows:
            out.append(f"FAIL    unmatched atlas row {row.class1} / {row.class2} beta={row.beta} cb={row.cb}")
        counts = f"rows: atlas {self.atlas_rows}, table {self.expected_rows}"
        passed = sum(c.status != "FAIL" for c in self.checks)
        flagged = sum(c.status == "FLAGGED" for c in self.checks)
        out.append(f"{counts}; matched {passed}/{self.expected_rows} ({flagged} flagged)")
        out.append("RESULT: " + ("PASS" if self.ok else "FAIL"))
        return out


def _orbit_set(t: FlypeTriple) -> frozenset[FlypeTriple]:
    return frozenset(lemma1_orbit(t))


def _pair_matches(row: AtlasRow, t1: FlypeTriple, t2: FlypeTriple) -> bool:
    sides = {_orbit_set(row.class1), _orbit_set(row.class2)}
    return {_orbit_set(t1), _orbit_set(t2)} == sides


def verify_table1(rows: Iterable[AtlasRow], fixture: Optional[Table1Fixture] = None) -> Table1Report:
    fixture = fixture or load_table1()
    rows = list(rows)
    deviations = {d.name: d for d in fixture.deviations}
    used: set[int] = set()
    checks = []
    for fx in fixture.rows:
        candidates = [i for i, r in enumerate(rows) if (r.beta, r.cb) == (fx.beta, fx.cb) and i not in used]
        hit = next((i for i in candidates if _pair_matches(rows[i], fx.triple1, fx.triple2)), None)
        if hit is not None:
            used.add(hit)
            r = rows[hit]
            checks.append(RowCheck(fx.name, fx.beta, fx.cb, "PASS", f"{r.class1} / {r.class2}", r))
            continue
        dev = deviations.get(fx.name)
        if dev is not None:
            t1, t2 = fx.triple1, fx.triple2
            if dev.field == "triple1" and t1 == dev.printed:
                t1 = dev.expected
            if dev.field == "triple2" and t2 == dev.printed:
                t2 = dev.expected
            hit = next((i for i in candidates if _pair_matches(rows[i], t1, t2)), None)
            if hit is not None:
                used.add(hit)
                r = rows[hit]
                detail = f"{r.class1} / {r.class2}; table prints {dev.printed}, expected {dev.expected}"
                checks.append(RowCheck(fx.name, fx.beta, fx.cb, "FLAGGED", detail, r))
                continue
        reason = "no atlas row with this (beta, cb)" if not candidates else "triples not in any matching orbit pair"
        checks.append(RowCheck(fx.name, fx.beta, fx.cb, "FAIL", reason))
    unmatched = tuple(r for i, r in enumerate(rows) if i not in used)
    return Table1Report(tuple(checks), len(fixture.rows), len(rows), unmatched)


# ---- names ---------------------------------------------------------------------------

REFERENCE_FIELDS = ("name", "components", "jones", "alexander", "determinant")


def load_reference_table(path) -> dict[tuple, str]:
    """Read ``name,components,jones,alexander,determinant`` rows into a fingerprint-key map."""
    text = path.read_text() if hasattr(path, "read_text") else Path(path).read_text()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        return {}
    if tuple(reader.fieldnames) != REFERENCE_FIELDS:
        raise ValueError(f"reference table columns must be {','.join(REFERENCE_FIELDS)}, got {reader.fieldnames}")
    table: dict[tuple, str] = {}
    for lineno, rec in enumerate(reader, start=2):
        try:
            fp = Fingerprint(
                components=int(rec["components"]),
                jones=LaurentPolynomial.parse(rec["jones"], "q"),
                alexander=LaurentPolynomial.parse(rec["alexander"], "t") if rec["alexander"] else None,
                determinant=int(rec["determinant"]) if rec["determinant"] else None,
            )
        except (TypeError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if not rec["name"]:
            raise ValueError(f"line {lineno}: empty name")
        key = fp.key()
        if key in table:
            raise ValueError(f"line {lineno}: duplicate invariant key (already named {table[key]!r})")
        table[key] = rec["name"]
    return table


def bundled_reference_path():
    return resources.files("braid3.data").joinpath("knot_names.csv")


def attach_names(rows: Iterable[AtlasRow], names: dict[tuple, str]) -> list[AtlasRow]:
    return [dataclasses.replace(r, name=names.get(r.fingerprint.key())) for r in rows]


def reference_table_from_fixture(fixture: Optional[Table1Fixture] = None) -> str:
    """CSV naming each fixture row's knot type by the fingerprint of its first braid."""
    fixture = fixture or load_table1()
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REFERENCE_FIELDS)
    for fx in fixture.rows:
        fp = fingerprint(flype_word(fx.triple1))
        writer.writerow((fx.name, *fp.key()))
    return out.getvalue()


# ---- export --------------------------------------------------------------------------

CSV_FIELDS = ("name", "beta", "cb", "class1", "class2", "fingerprint_id", "flags")


def export(rows: Iterable[AtlasRow], fmt: str) -> bytes:
    rows = list(rows)
    if fmt == "json":
        return (json.dumps([r.to_dict() for r in rows], indent=2) + "\n").encode()
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in rows:
            writer.writerow([r.name or "", r.beta, r.cb, str(r.class1), str(r.class2),
                             r.fingerprint.id, ";".join(r.flags)])
        return out.getvalue().encode()
    raise ValueError(f"unknown export format {fmt!r}")


def rows_from_json(data: bytes | str) -> list[AtlasRow]:
    return [AtlasRow.from_dict(d) for d in json.loads(data)]
