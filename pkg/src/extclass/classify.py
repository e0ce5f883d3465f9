"""Rebuild the n-dimensional rows over F_p from the three-dimensional bases.

For each base ``B`` (parameters sampled and reduced mod p) the orbit
representatives of ``Aut(B)`` on ``T_{n-3}(B)`` are turned into central
extensions, and each extension is identified against the catalog rows of
dimension n by exhaustive search over F_p.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .algebra import Algebra, annihilator, direct_sum_trivial
from .catalog import ALPHA_SAMPLES, CATALOG, TABLE1_NAMES, Catalog, theorem_count
from .cohomology import h2
from .errors import CatalogError, FieldMismatchError
from .extensions import central_extension, check_ann_formula, decompose, has_annihilator_component
from .fields import GF, Field
from .isomorphism import distinguish
from .orbits import SubspaceRep, automorphisms, orbit_reps

__all__ = [
    "BaseCase",
    "ExtensionRecord",
    "ClassifyReport",
    "sampled_alphas",
    "base_cases",
    "row_instances",
    "classify",
]


def sampled_alphas(p: int, nonzero: bool = False) -> list:
    """The sample parameters reduced mod p, one per class ``{α, α⁻¹}``.

    Samples with no image in F_p (``i`` when p = 3 mod 4) are skipped.  Each
    class is labelled by its smaller residue.
    """
    F = GF(p)
    seen = {}
    for raw in ALPHA_SAMPLES:
        try:
            a = F(raw)
        except (ArithmeticError, FieldMismatchError):
            continue
        if nonzero and not a:
            continue
        rep = a if not a else min(a, a.inverse())
        seen.setdefault(int(rep), rep)
    return [seen[k] for k in sorted(seen)]


@dataclass(frozen=True)
class BaseCase:
    label: str
    name: str
    alpha: object
    algebra: Algebra


def base_cases(p: int, catalog: Catalog = CATALOG) -> list[BaseCase]:
    """Every three-dimensional family over F_p; ``g3`` and ``A1`` once per sampled α."""
    F = GF(p)
    out = []
    for name in TABLE1_NAMES:
        entry = catalog.table1_entries[name]
        if entry.parametric:
            for a in sampled_alphas(p, entry.nonzero_alpha):
                out.append(BaseCase(f"{name}^{int(a)}", name, a, catalog.table1(name, a, F)))
        else:
            out.append(BaseCase(name, name, None, catalog.table1(name, None, F)))
    return out


def row_instances(n: int, p: int, catalog: Catalog = CATALOG, rows=None) -> list[tuple[str, int, Algebra]]:
    """Catalog rows ``A_{n,i}`` over F_p as ``(label, i, algebra)``."""
    F = GF(p)
    out = []
    for i in rows or range(1, theorem_count(n) + 1):
        entry = catalog.entry(n, i)
        if entry.parametric:
            for a in sampled_alphas(p, entry.nonzero_alpha):
                out.append((f"A_{{{n},{i}}}({int(a)})", i, catalog.main_theorem(n, i, a, F)))
        else:
            out.append((f"A_{{{n},{i}}}", i, catalog.main_theorem(n, i, None, F)))
    return out


@dataclass(frozen=True)
class ExtensionRecord:
    base: str
    s: int
    representative: SubspaceRep
    algebra: Algebra
    ann_dim: int
    ann_formula_ok: bool
    has_component: bool
    matches: tuple

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "s": self.s,
            "representative": [list(map(int, r)) for r in self.representative.matrix.rows],
            "ann_dim": self.ann_dim,
            "ann_formula_ok": self.ann_formula_ok,
            "has_annihilator_component": self.has_component,
            "matches": list(self.matches),
        }


@dataclass(frozen=True)
class ClassifyReport:
    n: int
    p: int
    records: tuple
    new_rows: tuple
    component_rows: tuple
    orbit_counts: tuple

    @property
    def one_to_one(self) -> bool:
        """Each extension matches exactly one new row and each new row exactly one extension."""
        hits = [r.matches for r in self.records]
        if any(len(m) != 1 or m[0] not in self.new_rows for m in hits):
            return False
        return sorted(m[0] for m in hits) == sorted(self.new_rows)

    @property
    def components_ok(self) -> bool:
        return all(ok for _, ok in self.component_rows)

    @property
    def ok(self) -> bool:
        return (self.one_to_one and self.components_ok
                and all(r.ann_formula_ok and r.ann_dim == r.s and not r.has_component for r in self.records))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "ok": self.ok,
            "one_to_one": self.one_to_one,
            "orbit_counts": [[b, c] for b, c in self.orbit_counts],
            "new_rows": list(self.new_rows),
            "component_rows": [[label, ok] for label, ok in self.component_rows],
            "extensions": [r.to_json() for r in self.records],
        }

    def summary(self) -> str:
        lines = [f"classify n={self.n} over F_{self.p}: {'ok' if self.ok else 'MISMATCH'}"]
        for base, count in self.orbit_counts:
            lines.append(f"  {base}: {count} orbit(s) at s={self.n - 3}")
        for r in self.records:
            match = ", ".join(r.matches) or "no match"
            rep = [[int(x) for x in row] for row in r.representative.matrix.rows]
            lines.append(f"  {r.base} {rep} -> {match}")
        bad = [label for label, ok in self.component_rows if not ok]
        lines.append(f"  rows with annihilator component: {len(self.component_rows)} checked"
                     + (f", failing: {', '.join(bad)}" if bad else ", all reproduced"))
        return "\n".join(lines)


def _run_base(args):
    case, s, n, p, catalog = args
    H = h2(case.algebra)
    if H.dim_h < s:
        return case.label, []
    aut = automorphisms(case.algebra)
    reps = orbit_reps(case.algebra, s, aut)
    rows = row_instances(n, p, catalog)
    out = []
    for rep in reps:
        W = rep.cocycles(H)
        E = central_extension(case.algebra, W, name=f"({case.label})_{n}")
        matches = tuple(label for label, _, R in rows if distinguish(E.algebra, R).kind == "isomorphic")
        out.append(ExtensionRecord(
            base=case.label,
            s=s,
            representative=rep,
            algebra=E.algebra,
            ann_dim=E.annihilator.dim,
            ann_formula_ok=check_ann_formula(E),
            has_component=has_annihilator_component(case.algebra, W),
            matches=matches,
        ))
    return case.label, out


def _component_row_ok(n: int, i: int, alpha, F: Field, catalog: Catalog) -> bool:
    try:
        A = catalog.main_theorem(n, i, alpha, F)
        lower = catalog.main_theorem(n - 1, i, alpha, F)
    except CatalogError:
        return False
    if A != direct_sum_trivial(lower, 1):
        return False
    base, W = decompose(A)
    return annihilator(A).dim == n - 3 and has_annihilator_component(base, W)


def classify(n: int, p: int = 3, jobs: int = 1, catalog: Catalog = CATALOG) -> ClassifyReport:
    if n < 4:
        raise ValueError("extensions start at n = 4")
    s = n - 3
    cases = base_cases(p, catalog)
    tasks = [(c, s, n, p, catalog) for c in cases]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_base, tasks))
    else:
        results = [_run_base(t) for t in tasks]
    records = tuple(r for _, recs in results for r in recs)
    counts = tuple((label, len(recs)) for label, recs in results)
    old = theorem_count(n - 1)
    new_rows = tuple(label for label, i, _ in row_instances(n, p, catalog) if i > old)
    F = GF(p)
    comp = []
    for label, i, _ in row_instances(n, p, catalog, rows=range(1, old + 1)):
        alpha = None
        if catalog.entry(n, i).parametric:
            alpha = F(int(label.rsplit("(", 1)[1].rstrip(")")))
        comp.append((label, _component_row_ok(n, i, alpha, F, catalog)))
    return ClassifyReport(n, p, records, new_rows, tuple(comp), counts)
