"""Alternating forms on the complexified dual basis of g2.

Dual labels are indexed 0..13 in the order ``H1*, H2*, E1*..E6*,
E1bar*..E6bar*``.  A form is a sparse map from strictly increasing label
tuples to coefficients; a coefficient is either an exact scalar or a
:class:`LambdaLinear`, a linear form in the metric parameters
``lambda0..lambda6``.

The exterior derivative is the anti-derivation generated by
``(d theta)(X, Y) = -theta([X, Y])`` on 1-forms.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import cache

from .roots import LABELS, ComplexBracketTable, complex_bracket_table, conjugate_label, label_index
from .scalars import I, ONE, ZERO, FieldElement, as_field, format_scalar

__all__ = [
    "NPARAMS",
    "QuadraticLambdaError",
    "LambdaLinear",
    "lam",
    "InvariantForm",
    "dual",
    "wedge",
    "d_one_form",
    "d",
    "j_action",
    "dual_label_name",
    "parse_labels",
    "format_linear",
]

NPARAMS = 7


class QuadraticLambdaError(TypeError):
    """Raised when two lambda-linear coefficients are multiplied."""


def format_linear(pairs: Iterable[tuple[str, FieldElement]]) -> str:
    """Render ``sum c * name`` with signs pulled out: ``2*i H1 - 2*sqrt3*i H2``."""
    parts: list[str] = []
    for name, c in pairs:
        if not c:
            continue
        neg = False
        if sum(1 for q in c.components if q) == 1:
            txt = format_scalar(c)
            if txt.startswith("-"):
                neg, txt = True, txt[1:]
        else:
            txt = f"({format_scalar(c)})"
        body = name if txt == "1" else f"{txt} {name}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def _is_scalar(x) -> bool:
    return isinstance(x, (FieldElement, int, Fraction)) and not isinstance(x, bool)


class LambdaLinear:
    """``c0*lambda0 + ... + c6*lambda6`` with coefficients in Q(sqrt3, i)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        c = [as_field(x) for x in coeffs]
        if len(c) > NPARAMS:
            raise ValueError(f"at most {NPARAMS} lambda coefficients")
        c += [ZERO] * (NPARAMS - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaLinear is immutable")

    @classmethod
    def from_terms(cls, terms: Mapping[int, object]) -> LambdaLinear:
        c = [ZERO] * NPARAMS
        for k, v in terms.items():
            c[k] = as_field(v)
        return cls(c)

    def terms(self) -> dict[int, FieldElement]:
        return {k: v for k, v in enumerate(self.coeffs) if v}

    def _other(self, other) -> LambdaLinear | None:
        if isinstance(other, LambdaLinear):
            return other
        # the zero scalar is the only constant a homogeneous linear form can absorb
        if _is_scalar(other) and not other:
            return _LZERO
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return LambdaLinear(a + b for a, b in zip(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return LambdaLinear(a - b for a, b in zip(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> LambdaLinear:
        return LambdaLinear(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, LambdaLinear):
            raise QuadraticLambdaError("product of two lambda-linear coefficients is quadratic")
        if not _is_scalar(other):
            return NotImplemented
        s = as_field(other)
        return LambdaLinear(s * a for a in self.coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * as_field(other).inverse()

    def conjugate(self) -> LambdaLinear:
        """Complex conjugate, with the parameters themselves real."""
        return LambdaLinear(a.conjugate() for a in self.coeffs)

    def evaluate(self, values: Sequence) -> FieldElement:
        if len(values) != NPARAMS:
            raise ValueError(f"expected {NPARAMS} parameter values")
        return sum((c * as_field(v) for c, v in zip(self.coeffs, values) if c), ZERO)

    def substitute(self, mapping: Mapping[int, LambdaLinear]) -> LambdaLinear:
        """Replace ``lambda_k`` by ``mapping[k]``; unmapped parameters stay."""
        out = _LZERO
        for k, c in self.terms().items():
            out = out + c * mapping.get(k, lam(k))
        return out

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("LambdaLinear", self.coeffs))

    def __repr__(self) -> str:
        return f"LambdaLinear({str(self)!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self, names: Sequence[str] | None = None) -> str:
        """E.g. ``1/6 λ3 - 1/4 λ5 + 1/12 λ6`` or ``-6*i λ1 + 2*i λ3``."""
        names = names or [f"λ{k}" for k in range(NPARAMS)]
        return format_linear((names[k], c) for k, c in self.terms().items())


_LZERO = LambdaLinear()


def lam(k: int) -> LambdaLinear:
    """The coordinate function ``lambda_k``."""
    return LambdaLinear.from_terms({k: 1})


def _kind(c) -> str:
    return "lambda" if isinstance(c, LambdaLinear) else "scalar"


def _normalize_coeff(c):
    if isinstance(c, LambdaLinear):
        return c
    return as_field(c)


def _sort_with_sign(idx: Sequence[int]) -> tuple[tuple[int, ...] | None, int]:
    """Sorted tuple and permutation sign, or ``(None, 0)`` on a repeat."""
    if len(set(idx)) != len(idx):
        return None, 0
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return tuple(sorted(idx)), (-1 if inversions % 2 else 1)


def dual_label_name(k: int) -> str:
    return LABELS[k] + "*"


def parse_labels(labels: Iterable) -> tuple[int, ...]:
    """Accept label indices or names such as ``"E1bar"`` / ``"E1bar*"``."""
    out = []
    for x in labels:
        if isinstance(x, int):
            if not 0 <= x < len(LABELS):
                raise ValueError(f"label index out of range: {x}")
            out.append(x)
        else:
            out.append(label_index(str(x).rstrip("*")))
    return tuple(out)


class InvariantForm:
    """Sparse alternating form over the 14 complex dual labels."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[tuple[int, ...], object] | None = None) -> None:
        if degree < 0:
            raise ValueError("degree must be non-negative")
        clean: dict[tuple[int, ...], object] = {}
        kinds = set()
        for idx, c in (terms or {}).items():
            if len(idx) != degree or any(idx[k] >= idx[k + 1] for k in range(len(idx) - 1)):
                raise ValueError(f"label tuple {idx} is not strictly increasing of length {degree}")
            c = _normalize_coeff(c)
            if c:
                clean[tuple(idx)] = c
                kinds.add(_kind(c))
        if len(kinds) > 1:
            raise TypeError("a form cannot mix scalar and lambda-linear coefficients")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("InvariantForm is immutable")

    @classmethod
    def from_unsorted(cls, degree: int, items: Iterable[tuple[Iterable, object]]) -> InvariantForm:
        """Build from ``(labels, coeff)`` pairs in any label order, summing repeats."""
        acc: dict[tuple[int, ...], object] = {}
        for labels, c in items:
            idx, sign = _sort_with_sign(parse_labels(labels))
            if idx is None:
                continue
            c = _normalize_coeff(c)
            acc[idx] = acc[idx] + sign * c if idx in acc else sign * c
        return cls(degree, acc)

    @classmethod
    def zero(cls, degree: int) -> InvariantForm:
        return cls(degree)

    @property
    def kind(self) -> str | None:
        """``"scalar"``, ``"lambda"``, or ``None`` for the zero form."""
        for c in self.terms.values():
            return _kind(c)
        return None

    def coefficient(self, labels: Iterable):
        """Value on the given labels (any order; sign applied, zero on repeats)."""
        idx, sign = _sort_with_sign(parse_labels(labels))
        if idx is None or len(idx) != self.degree:
            return ZERO
        c = self.terms.get(idx)
        if c is None:
            return _LZERO if self.kind == "lambda" else ZERO
        return sign * c

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _combine(self, other: InvariantForm, sign: int) -> InvariantForm:
        if not isinstance(other, InvariantForm):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        acc = dict(self.terms)
        for idx, c in other.terms.items():
            acc[idx] = acc[idx] + sign * c if idx in acc else sign * c
        return InvariantForm(self.degree, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self) -> InvariantForm:
        return InvariantForm(self.degree, {k: -c for k, c in self.terms.items()})

    def __mul__(self, s):
        if isinstance(s, InvariantForm):
            return NotImplemented
        return InvariantForm(self.degree, {k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: InvariantForm) -> InvariantForm:
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InvariantForm):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.degree, tuple(self.terms.items())))

    def conjugate(self) -> InvariantForm:
        """Swap E_j* with E_j-bar* and conjugate every coefficient."""
        return InvariantForm.from_unsorted(
            self.degree, ((tuple(conjugate_label(k) for k in idx), c.conjugate()) for idx, c in self.terms.items())
        )

    def evaluate(self, values: Sequence) -> InvariantForm:
        """Substitute numbers for lambda0..lambda6."""
        if self.kind != "lambda":
            return self
        return InvariantForm(self.degree, {k: c.evaluate(values) for k, c in self.terms.items()})

    def substitute(self, mapping: Mapping[int, LambdaLinear]) -> InvariantForm:
        if self.kind != "lambda":
            return self
        return InvariantForm(self.degree, {k: c.substitute(mapping) for k, c in self.terms.items()})

    def render(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for idx, c in self.terms.items():
            labels = "^".join(dual_label_name(k) for k in idx) or "1"
            coef = str(c) if self.kind == "scalar" else f"({c})"
            lines.append(f"{coef} {labels}")
        return "\n".join(lines)

    __str__ = render

    def __repr__(self) -> str:
        return f"InvariantForm(degree={self.degree}, terms={len(self.terms)})"

    def to_json(self) -> list[dict]:
        return [
            {"labels": [dual_label_name(k) for k in idx], "coeff": str(c)}
            for idx, c in self.terms.items()
        ]


def dual(label, coeff=ONE) -> InvariantForm:
    """The 1-form ``coeff * label*``."""
    (k,) = parse_labels([label])
    return InvariantForm(1, {(k,): coeff})


def wedge(alpha: InvariantForm, beta: InvariantForm) -> InvariantForm:
    acc: dict[tuple[int, ...], object] = {}
    for ia, ca in alpha.terms.items():
        for ib, cb in beta.terms.items():
            idx, sign = _sort_with_sign(ia + ib)
            if idx is None:
                continue
            c = ca * cb  # raises on lambda x lambda
            c = c if sign > 0 else -c
            acc[idx] = acc[idx] + c if idx in acc else c
    return InvariantForm(alpha.degree + beta.degree, acc)


def _d_one_form_from(table: ComplexBracketTable, k: int) -> InvariantForm:
    terms = {}
    for (p, q), rel in table.constants.items():
        c = rel.get(k)
        if c:
            terms[(p, q)] = -c
    return InvariantForm(2, terms)


@cache
def _d_table_default() -> tuple[InvariantForm, ...]:
    table = complex_bracket_table()
    return tuple(_d_one_form_from(table, k) for k in range(len(LABELS)))


def d_one_form(label, table: ComplexBracketTable | None = None) -> InvariantForm:
    """``d(theta)`` for a dual basis label ``theta``: coefficient ``-theta([e_p, e_q])``."""
    (k,) = parse_labels([label])
    if table is None:
        return _d_table_default()[k]
    return _d_one_form_from(table, k)


def d(alpha: InvariantForm, table: ComplexBracketTable | None = None) -> InvariantForm:
    """Exterior derivative, extended from 1-forms as a degree +1 anti-derivation."""
    dtab = _d_table_default() if table is None else tuple(_d_one_form_from(table, k) for k in range(len(LABELS)))
    acc: dict[tuple[int, ...], object] = {}
    for idx, c in alpha.terms.items():
        for pos, k in enumerate(idx):
            sign = -1 if pos % 2 else 1
            before, after = idx[:pos], idx[pos + 1:]
            for (p, q), dc in dtab[k].terms.items():
                new, s = _sort_with_sign(before + (p, q) + after)
                if new is None:
                    continue
                val = c * dc
                val = val if sign * s > 0 else -val
                acc[new] = acc[new] + val if new in acc else val
    return InvariantForm(alpha.degree + 1, acc)


def _j_label(k: int) -> tuple[int, FieldElement]:
    # J H1* = -H2*, J H2* = H1*, J E_j* = i E_j*, J E_j-bar* = -i E_j-bar*
    if k == 0:
        return 1, -ONE
    if k == 1:
        return 0, ONE
    return k, (I if k < 8 else -I)


def j_action(alpha: InvariantForm) -> InvariantForm:
    """``(J alpha)(X, ...) = alpha(JX, ...)``, computed label by label."""
    items = []
    for idx, c in alpha.terms.items():
        factor = ONE
        new = []
        for k in idx:
            m, f = _j_label(k)
            new.append(m)
            factor = factor * f
        items.append((tuple(new), c * factor))
    return InvariantForm.from_unsorted(alpha.degree, items)
