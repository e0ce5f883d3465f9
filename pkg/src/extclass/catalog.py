"""Embedded multiplication tables.

``table1`` gives the eight three-dimensional families that serve as bases,
``main_theorem`` the classified algebras ``A_{n,i}`` with (n-3)-dimensional
annihilator.  Tables use 1-based indices ``{(i, j): {k: coefficient}}``;
the string ``"alpha"`` marks the parameter slot.
"""
from __future__ import annotations

import copy
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, annihilator, bracket, direct_sum_trivial
from .errors import CatalogError
from .fields import QI, Field, GaussianRational, Q, Residue, field_of
from .linalg import Matrix

__all__ = [
    "CatalogEntry",
    "Catalog",
    "CATALOG",
    "TABLE1_NAMES",
    "ALPHA_SAMPLES",
    "table1",
    "main_theorem",
    "theorem_count",
    "normalize_alpha",
    "alpha_inversion_witness",
    "parameter_witness",
]

ALPHA = "alpha"

TABLE1_NAMES = ("N", "g1", "g2", "g3", "g4", "A1", "A2", "A3")

# exact parameter samples used by the verification runs
ALPHA_SAMPLES = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1), GaussianRational(0, 1))

_DOMAIN = "C*_{>1} ∪ {0, 1}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    dim: int
    table: dict
    base: str | None = None
    alpha_domain: str | None = None
    nonzero_alpha: bool = False

    @property
    def parametric(self) -> bool:
        return self.alpha_domain is not None


def _t1():
    return {
        "N": CatalogEntry("N", 3, {}),
        "g1": CatalogEntry("g1", 3, {(2, 3): {1: 1}}),
        "g2": CatalogEntry("g2", 3, {(1, 3): {1: 1}, (2, 3): {2: 1}}),
        "g3": CatalogEntry("g3", 3, {(1, 3): {1: 1, 2: 1}, (2, 3): {2: ALPHA}}, alpha_domain=_DOMAIN),
        "g4": CatalogEntry("g4", 3, {(1, 2): {3: 1}, (1, 3): {2: -1}, (2, 3): {1: 1}}),
        "A1": CatalogEntry("A1", 3, {(1, 2): {3: 1}, (1, 3): {1: 1, 3: 1}, (2, 3): {2: ALPHA}},
                           alpha_domain=_DOMAIN),
        "A2": CatalogEntry("A2", 3, {(1, 2): {1: 1}, (2, 3): {2: 1}}),
        "A3": CatalogEntry("A3", 3, {(1, 2): {3: 1}, (1, 3): {1: 1}, (2, 3): {2: 1}}),
    }


def _theorem():
    # new rows at each dimension; lower rows are padded with central vectors
    t1 = _t1()
    rows = {
        (3, 1): CatalogEntry("A_{3,1}", 3, t1["g2"].table, "g2"),
        (3, 2): CatalogEntry("A_{3,2}", 3, t1["g3"].table, "g3", "C*_{>1} ∪ {1}", nonzero_alpha=True),
        (3, 3): CatalogEntry("A_{3,3}", 3, t1["g4"].table, "g4"),
        (3, 4): CatalogEntry("A_{3,4}", 3, t1["A1"].table, "A1", _DOMAIN),
        (3, 5): CatalogEntry("A_{3,5}", 3, t1["A2"].table, "A2"),
        (3, 6): CatalogEntry("A_{3,6}", 3, t1["A3"].table, "A3"),
        (4, 7): CatalogEntry("A_{4,7}", 4, {(1, 2): {4: 1}, (2, 3): {1: 1}}, "g1"),
        (4, 8): CatalogEntry("A_{4,8}", 4, {(1, 2): {4: 1}, (1, 3): {1: 1}, (2, 3): {2: 1}}, "g2"),
        (4, 9): CatalogEntry("A_{4,9}", 4, {(1, 2): {4: 1}, (1, 3): {1: 1, 2: 1}, (2, 3): {2: ALPHA}},
                             "g3", _DOMAIN),
        (4, 10): CatalogEntry("A_{4,10}", 4, {(1, 3): {1: 1, 2: 1}, (2, 3): {4: 1}}, "g3^0"),
        (4, 11): CatalogEntry("A_{4,11}", 4, {(1, 2): {3: 1}, (1, 3): {1: 1, 3: 1}, (2, 3): {4: 1}}, "A1^0"),
        (4, 12): CatalogEntry("A_{4,12}", 4, {(1, 2): {1: 1}, (1, 3): {4: 1}, (2, 3): {2: 1}}, "A2"),
        (5, 13): CatalogEntry("A_{5,13}", 5, {(1, 3): {4: 1}, (2, 3): {5: 1}}, "N"),
        (5, 14): CatalogEntry("A_{5,14}", 5, {(1, 2): {4: 1}, (1, 3): {5: 1}, (2, 3): {1: 1}}, "g1"),
        (5, 15): CatalogEntry("A_{5,15}", 5, {(1, 2): {4: 1}, (1, 3): {1: 1, 2: 1}, (2, 3): {5: 1}}, "g3^0"),
        (6, 16): CatalogEntry("A_{6,16}", 6, {(1, 2): {4: 1}, (1, 3): {5: 1}, (2, 3): {6: 1}}, "N"),
    }
    return rows


def theorem_count(n: int) -> int:
    """Number of rows ``A_{n,i}`` for dimension ``n``."""
    if n < 3:
        raise CatalogError(f"the classification starts at n = 3, got {n}")
    return {3: 6, 4: 12, 5: 15}.get(n, 16)


def _field_for(alpha, field: Field | None) -> Field:
    if field is not None:
        return field
    if alpha is None:
        return Q
    if isinstance(alpha, str):
        return QI if "i" in alpha else Q
    if isinstance(alpha, int):
        return Q
    return field_of(alpha)


def _coerce_alpha(alpha, field: Field):
    if alpha is None:
        return None
    if isinstance(alpha, str):
        alpha = (QI if "i" in alpha else Q).parse(alpha)
    return field(alpha)


class Catalog:
    """The embedded tables; a fresh instance can be modified without touching the default."""

    def __init__(self):
        self.table1_entries = _t1()
        self.theorem_entries = _theorem()

    def copy(self) -> Catalog:
        return copy.deepcopy(self)

    def _build(self, entry: CatalogEntry, alpha, field: Field | None, name: str) -> Algebra:
        F = _field_for(alpha, field)
        if entry.parametric and alpha is None:
            raise CatalogError(f"{entry.name} needs a parameter alpha")
        if not entry.parametric and alpha is not None:
            raise CatalogError(f"{entry.name} takes no parameter")
        a = _coerce_alpha(alpha, F)
        if entry.nonzero_alpha and not a:
            raise CatalogError(f"{entry.name} requires alpha != 0")
        table = {
            key: {k: (a if c == ALPHA else c) for k, c in out.items()}
            for key, out in entry.table.items()
        }
        return Algebra.from_table(entry.dim, table, F, name)

    def table1(self, name: str, alpha=None, field: Field | None = None) -> Algebra:
        """One of the eight three-dimensional families (``N``, ``g1`` … ``A3``)."""
        if name not in self.table1_entries:
            raise CatalogError(f"unknown three-dimensional algebra {name!r}; expected one of {', '.join(TABLE1_NAMES)}")
        entry = self.table1_entries[name]
        label = name if alpha is None else f"{name}^{_alpha_label(alpha)}"
        return self._build(entry, alpha, field, label)

    def main_theorem(self, n: int, i: int, alpha=None, field: Field | None = None) -> Algebra:
        """``A_{n,i}``; rows inherited from lower dimensions get central vectors appended."""
        count = theorem_count(n)
        if not 1 <= i <= count:
            raise CatalogError(f"A_{{{n},{i}}} does not exist; i ranges over 1..{count}")
        label = f"A_{{{n},{i}}}" + ("" if alpha is None else f"({_alpha_label(alpha)})")
        if (n, i) in self.theorem_entries:
            A = self._build(self.theorem_entries[(n, i)], alpha, field, label)
        else:
            lower = n - 1 if n <= 6 else 6
            A = direct_sum_trivial(self.main_theorem(lower, i, alpha, field), n - lower).with_name(label)
        ann = annihilator(A).dim
        if ann != n - 3:
            raise CatalogError(f"{label} has annihilator of dimension {ann}, expected {n - 3}")
        return A

    def entry(self, n: int, i: int) -> CatalogEntry:
        count = theorem_count(n)
        if not 1 <= i <= count:
            raise CatalogError(f"A_{{{n},{i}}} does not exist")
        while (n, i) not in self.theorem_entries:
            n -= 1
        return self.theorem_entries[(n, i)]

    def base_label(self, n: int, i: int) -> tuple[str, bool]:
        """Base family name of ``A_{n,i} / Ann`` and whether it carries the row's alpha.

        Rows with ``i <= 6`` at n > 3 have the three-dimensional row itself as quotient.
        """
        e = self.entry(n, i)
        if e.base.endswith("^0"):
            return e.base[:-2], False
        return e.base, e.parametric

    def quotient_reference(self, n: int, i: int, alpha=None, field: Field | None = None) -> Algebra:
        base, takes_alpha = self.base_label(n, i)
        if base in ("g3", "A1") and not takes_alpha:
            return self.table1(base, 0, field=field or _field_for(alpha, None))
        return self.table1(base, alpha if takes_alpha else None, field=field or _field_for(alpha, None))


def _alpha_label(alpha) -> str:
    if isinstance(alpha, GaussianRational):
        return QI.format(alpha).replace(" ", "")
    if isinstance(alpha, Residue):
        return str(alpha.value)
    return str(alpha)


CATALOG = Catalog()


def table1(name: str, alpha=None, field: Field | None = None) -> Algebra:
    return CATALOG.table1(name, alpha, field)


def main_theorem(n: int, i: int, alpha=None, field: Field | None = None) -> Algebra:
    return CATALOG.main_theorem(n, i, alpha, field)


def normalize_alpha(alpha):
    """Representative of ``{α, α⁻¹}`` in ``C*_{>1} ∪ {0, 1}``.

    Keeps 0 and 1, keeps ``|α| > 1``, inverts ``|α| < 1``; on the unit circle
    keeps ``0 < arg α <= π`` (positive imaginary part, or α = -1) and inverts
    the rest.  All comparisons are exact on ``|α|² = re² + im²``.
    """
    if isinstance(alpha, (int, Fraction)) and not isinstance(alpha, bool):
        g = GaussianRational(alpha, 0)
        rational = True
    elif isinstance(alpha, GaussianRational):
        g = alpha
        rational = False
    else:
        raise TypeError("normalize_alpha expects an element of Q(i)")
    if g == 0 or g == 1:
        return alpha
    norm = g.norm()
    if norm > 1:
        keep = True
    elif norm < 1:
        keep = False
    else:
        keep = g.im > 0 or g == -1
    out = g if keep else g.inverse()
    return out.re if rational else out


def alpha_inversion_witness(alpha, n: int = 3, field: Field | None = None) -> Matrix:
    """An isomorphism ``g3^{1/α} → g3^{α}`` (``n = 3``) or ``A_{4,9}(1/α) → A_{4,9}(α)`` (``n = 4``).

    Diagonalise right multiplication by ``e3`` on ``⟨e1, e2⟩`` (eigenvalues 1
    and α), rescale ``e3`` by ``α⁻¹`` and swap the two eigenvectors.  Needs
    ``α ∉ {0, 1}``.
    """
    F = _field_for(alpha, field)
    a = _coerce_alpha(alpha, F)
    if not a or a == 1:
        raise ValueError("the eigenbasis construction needs alpha not in {0, 1}")
    one, zero = F.one, F.zero
    u = [one, one / (one - a), zero]           # eigenvalue 1 under [., e3]
    f1 = [F(0) - a / (a - one) * u[0], one - a / (a - one) * u[1], zero]
    f2 = u
    f3 = [zero, zero, one / a]
    if n == 3:
        return Matrix.from_columns([f1, f2, f3], F)
    if n != 4:
        raise ValueError("only n = 3 and n = 4 are supported")
    target = main_theorem(4, 9, a, F)
    cols = [v + [zero] for v in (f1, f2, f3)]
    f4 = list(bracket(target, cols[0], cols[1]))
    return Matrix.from_columns(cols + [f4], F)


def _g3_parameter(A: Algebra):
    """α if ``A`` equals ``g3^α`` (n = 3) or ``A_{4,9}(α)`` (n = 4) exactly, else None."""
    if A.dim not in (3, 4):
        return None
    a = A.bracket_basis(2, 3)[1]
    try:
        ref = table1("g3", a, A.field) if A.dim == 3 else main_theorem(4, 9, a, A.field)
    except Exception:
        return None
    return a if ref == A else None


def parameter_witness(A: Algebra, B: Algebra) -> Matrix | None:
    """A witness ``A → B`` when both are g3-type with mutually inverse parameters."""
    if A.dim != B.dim or A.field != B.field:
        return None
    a, b = _g3_parameter(A), _g3_parameter(B)
    if a is None or b is None or not a or not b or a * b != 1 or a == 1:
        return None
    return alpha_inversion_witness(b, A.dim, A.field)
