"""Sparse multivariate polynomials with weighted gradings, and vectors in
finite free modules over the polynomial ring.

Monomials are sparse exponent vectors ((var_index, exponent), ...) sorted by
index with all exponents positive; () is the monomial 1.  Polynomials map
monomials to nonzero field elements; module vectors map (component, monomial)
pairs to nonzero field elements.  Everything is immutable and canonical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import (
    RATIONAL_FUNCTIONS,
    RATIONALS,
    FieldDescriptor,
    FieldElement,
    format_scalar,
)

Monomial = tuple
MONOMIAL_ONE: Monomial = ()

GREVLEX = "grevlex"
LEX = "lex"


# ---------------------------------------------------------------------------
# Monomial helpers
# ---------------------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None when b does not divide a."""
    if not b:
        return a
    rest = dict(a)
    for i, e in b:
        have = rest.get(i, 0)
        if have < e:
            return None
        if have == e:
            del rest[i]
        else:
            rest[i] = have - e
    return tuple(sorted(rest.items()))


def mono_divides(b: Monomial, a: Monomial) -> bool:
    return mono_div(a, b) is not None


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    merged = dict(a)
    for i, e in b:
        if merged.get(i, 0) < e:
            merged[i] = e
    return tuple(sorted(merged.items()))


def mono_degree(m: Monomial, weights: tuple) -> int:
    return sum(weights[i] * e for i, e in m)


# ---------------------------------------------------------------------------
# Rings and monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring over an exact field, with one positive weight per
    variable and a fixed monomial order.

    The default order is weighted graded reverse lexicographic, which is
    degree compatible: leading terms respect the grading, so staircase
    counts of graded pieces are exact.
    """

    field: FieldDescriptor
    names: tuple
    weights: tuple = ()
    order: str = GREVLEX

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        weights = tuple(self.weights) if self.weights else tuple(1 for _ in names)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable required")
        if any((not isinstance(w, int)) or w <= 0 for w in weights):
            raise ValueError("weights must be positive integers")
        if self.order not in (GREVLEX, LEX):
            raise ValueError(f"unknown monomial order {self.order!r}")
        if self.field.kind == RATIONAL_FUNCTIONS and self.field.variable in names:
            raise ValueError(
                f"variable {self.field.variable!r} collides with the coefficient field generator")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def weighted_degree(self, m: Monomial) -> int:
        return mono_degree(m, self.weights)

    def monomial_key(self, m: Monomial) -> tuple:
        """A flat integer tuple; comparing keys compares monomials."""
        n = len(self.names)
        dense = [0] * n
        for i, e in m:
            dense[i] = e
        if self.order == LEX:
            return tuple(dense)
        wdeg = sum(self.weights[i] * dense[i] for i in range(n))
        return (wdeg,) + tuple(-dense[i] for i in range(n - 1, -1, -1))

    def module_key(self, comp: int, m: Monomial) -> tuple:
        """Position-over-term: earlier components dominate, then the ring order."""
        return (-comp,) + self.monomial_key(m)

    # -- element builders -----------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.from_int(1)

    def from_scalar(self, c: FieldElement) -> "Polynomial":
        if c.field != self.field:
            raise ValueError("scalar from a different field")
        return Polynomial(self, {} if c.is_zero() else {MONOMIAL_ONE: c})

    def from_int(self, n: int) -> "Polynomial":
        return self.from_scalar(self.field.from_int(n))

    def variable(self, name: str) -> "Polynomial":
        i = self.index(name)
        return Polynomial(self, {((i, 1),): self.field.one()})

    def monomial(self, exponents: dict, coefficient=None) -> "Polynomial":
        m = tuple(sorted((self.index(k) if isinstance(k, str) else k, e)
                         for k, e in exponents.items() if e))
        if any(e < 0 for _, e in m):
            raise ValueError("exponents must be non-negative")
        c = self.field.one() if coefficient is None else coefficient
        if isinstance(c, int):
            c = self.field.from_int(c)
        return Polynomial(self, {m: c} if not c.is_zero() else {})

    def __str__(self):
        vars_ = " ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"{self.field}[{vars_}]"


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Terms are stored as a dict {monomial: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def build(ring: PolyRing, items) -> "Polynomial":
        """Sum an iterable of (monomial, coefficient) pairs into canonical form."""
        acc: dict = {}
        for m, c in items:
            cur = acc.get(m)
            nc = c if cur is None else cur + c
            if nc.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = nc
        return Polynomial(ring, acc)

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and MONOMIAL_ONE in self.terms)

    def constant_coefficient(self) -> FieldElement:
        return self.terms.get(MONOMIAL_ONE, self.ring.field.zero())

    def leading(self) -> tuple:
        """(monomial, coefficient) of the largest term in the ring order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        key = self.ring.monomial_key
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def sorted_terms(self) -> list:
        key = self.ring.monomial_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self):
        return iter(self.sorted_terms())

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading()
        if c.is_one():
            return self
        inv = c.inverse()
        return Polynomial(self.ring, {m: v * inv for m, v in self.terms.items()})

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomial ring mismatch")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            nc = c if cur is None else cur + c
            if nc.is_zero():
                out.pop(m, None)
            else:
                out[m] = nc
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                cur = out.get(m)
                nc = c if cur is None else cur + c
                if nc.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = nc
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        if isinstance(other, FieldElement):
            return self.ring.from_scalar(other)
        return NotImplemented

    def scale(self, c) -> "Polynomial":
        if isinstance(c, int):
            c = self.ring.field.from_int(c)
        if c.is_zero():
            return self.ring.zero()
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers take non-negative integer exponents")
        if exponent == 0:
            return self.ring.one()
        if len(self.terms) == 1:
            ((m, c),) = self.terms.items()
            pm = tuple((i, e * exponent) for i, e in m)
            return Polynomial(self.ring, {pm: c ** exponent})
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<{format_polynomial(self)}>"

    def __str__(self):
        return format_polynomial(self)


# ---------------------------------------------------------------------------
# Polynomial operations
# ---------------------------------------------------------------------------

def partial_derivative(p: Polynomial, name: str) -> Polynomial:
    """Formal partial derivative with respect to a ring variable."""
    i = p.ring.index(name)
    out = {}
    for m, c in p.terms.items():
        d = dict(m)
        e = d.get(i, 0)
        if e == 0:
            continue
        nc = c * e
        if nc.is_zero():
            continue
        if e == 1:
            del d[i]
        else:
            d[i] = e - 1
        out[tuple(sorted(d.items()))] = nc
    return Polynomial(p.ring, out)


def weighted_degree(p: Polynomial):
    """The common weighted degree of a homogeneous polynomial, or None when
    the terms have mixed degrees.  The zero polynomial has degree 0."""
    degs = {p.ring.weighted_degree(m) for m in p.terms}
    if not degs:
        return 0
    if len(degs) == 1:
        return degs.pop()
    return None


def is_homogeneous(p: Polynomial) -> bool:
    return weighted_degree(p) is not None


def homogeneous_components(p: Polynomial) -> dict:
    """Split into {degree: homogeneous part}; the parts sum back to p."""
    parts: dict = {}
    for m, c in p.terms.items():
        parts.setdefault(p.ring.weighted_degree(m), {})[m] = c
    return {d: Polynomial(p.ring, t) for d, t in sorted(parts.items())}


def euler_apply(p: Polynomial) -> Polynomial:
    """The Euler operator: sum over variables of weight(X_i) * X_i * dp/dX_i.

    On a homogeneous input this returns deg(p) * p; in general it returns the
    sum of deg * component over the homogeneous components.
    """
    ring = p.ring
    total = ring.zero()
    for i, name in enumerate(ring.names):
        d = partial_derivative(p, name)
        if d.is_zero():
            continue
        total = total + ring.variable(name).scale(ring.weights[i]) * d
    return total


def rename_variables(p: Polynomial, mapping: dict) -> Polynomial:
    """Rename variables through an injective name map; unmapped variables keep
    their names.  Weights and order are carried along."""
    ring = p.ring
    new_names = tuple(mapping.get(n, n) for n in ring.names)
    for k in mapping:
        ring.index(k)  # unknown source name -> error
    if len(set(new_names)) != len(new_names):
        raise ValueError("variable renaming collides")
    target = PolyRing(ring.field, new_names, ring.weights, ring.order)
    return Polynomial(target, dict(p.terms))


def cast(p: Polynomial, target: PolyRing, rename: dict | None = None) -> Polynomial:
    """Re-express p in another ring over the same field, matching variables by
    (optionally renamed) name."""
    if p.ring.field != target.field:
        raise ValueError("field mismatch")
    rename = rename or {}
    index_map = {}
    for i, n in enumerate(p.ring.names):
        index_map[i] = target.index(rename.get(n, n))
    out = {}
    for m, c in p.terms.items():
        nm = tuple(sorted((index_map[i], e) for i, e in m))
        out[nm] = c
    return Polynomial(target, out)


def substitute(p: Polynomial, images: dict, target: PolyRing) -> Polynomial:
    """Evaluate p at X_i = images[name], a polynomial of the target ring.
    Every variable occurring in p must be mapped."""
    if p.ring.field != target.field:
        raise ValueError("field mismatch")
    imgs = {}
    for name, q in images.items():
        i = p.ring.index(name)
        if q.ring != target:
            raise ValueError("image polynomial from the wrong ring")
        imgs[i] = q
    total = target.zero()
    for m, c in p.terms.items():
        term = target.from_scalar(c)
        for i, e in m:
            if i not in imgs:
                raise ValueError(f"no image for variable {p.ring.names[i]!r}")
            term = term * (imgs[i] ** e)
        total = total + term
    return total


def monomials_of_weighted_degree(ring: PolyRing, degree: int) -> list:
    """All monomials of exact weighted degree, ascending in the ring order."""
    out: list = []

    def walk(var: int, remaining: int, acc: list):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if var >= ring.nvars:
            return
        w = ring.weights[var]
        walk(var + 1, remaining, acc)
        e = 1
        while w * e <= remaining:
            acc.append((var, e))
            walk(var + 1, remaining - w * e, acc)
            acc.pop()
            e += 1

    if degree == 0:
        return [MONOMIAL_ONE]
    if degree < 0:
        return []
    walk(0, degree, [])
    out.sort(key=ring.monomial_key)
    return out


# ---------------------------------------------------------------------------
# Module vectors
# ---------------------------------------------------------------------------

class ModuleVector:
    """An element of a free module R^rank over the polynomial ring; terms map
    (component, monomial) to nonzero coefficients."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring: PolyRing, rank: int, terms: dict):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleVector is immutable")

    @staticmethod
    def build(ring: PolyRing, rank: int, items) -> "ModuleVector":
        acc: dict = {}
        for key, c in items:
            comp = key[0]
            if not 0 <= comp < rank:
                raise ValueError(f"component {comp} out of range for rank {rank}")
            cur = acc.get(key)
            nc = c if cur is None else cur + c
            if nc.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = nc
        return ModuleVector(ring, rank, acc)

    @staticmethod
    def from_components(ring: PolyRing, polys: list) -> "ModuleVector":
        terms = {}
        for comp, p in enumerate(polys):
            for m, c in p.terms.items():
                terms[(comp, m)] = c
        return ModuleVector(ring, len(polys), terms)

    @staticmethod
    def unit(ring: PolyRing, rank: int, comp: int) -> "ModuleVector":
        if not 0 <= comp < rank:
            raise ValueError(f"component {comp} out of range for rank {rank}")
        return ModuleVector(ring, rank, {(comp, MONOMIAL_ONE): ring.field.one()})

    def component(self, comp: int) -> Polynomial:
        return Polynomial(
            self.ring, {m: c for (cm, m), c in self.terms.items() if cm == comp})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "ModuleVector"):
        if self.ring != other.ring or self.rank != other.rank:
            raise ValueError("module mismatch")

    def __add__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            cur = out.get(k)
            nc = c if cur is None else cur + c
            if nc.is_zero():
                out.pop(k, None)
            else:
                out[k] = nc
        return ModuleVector(self.ring, self.rank, out)

    def __neg__(self):
        return ModuleVector(self.ring, self.rank,
                            {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "ModuleVector":
        if isinstance(c, int):
            c = self.ring.field.from_int(c)
        if c.is_zero():
            return ModuleVector(self.ring, self.rank, {})
        return ModuleVector(self.ring, self.rank,
                            {k: v * c for k, v in self.terms.items()})

    def poly_mul(self, p: Polynomial) -> "ModuleVector":
        if p.ring != self.ring:
            raise ValueError("polynomial ring mismatch")
        out: dict = {}
        for (comp, m1), c1 in self.terms.items():
            for m2, c2 in p.terms.items():
                k = (comp, mono_mul(m1, m2))
                c = c1 * c2
                cur = out.get(k)
                nc = c if cur is None else cur + c
                if nc.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = nc
        return ModuleVector(self.ring, self.rank, out)

    def leading(self) -> tuple:
        """((component, monomial), coefficient) maximal in position-over-term order."""
        if not self.terms:
            raise ValueError("the zero vector has no leading term")
        key = self.ring.module_key
        k = max(self.terms, key=lambda t: key(*t))
        return k, self.terms[k]

    def sorted_terms(self) -> list:
        key = self.ring.module_key
        return sorted(self.terms.items(), key=lambda t: key(*t[0]), reverse=True)

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.ring == other.ring and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        return f"<{format_vector(self)}>"

    def __str__(self):
        return format_vector(self)


def module_weighted_degree(v: ModuleVector):
    """Weighted degree of a homogeneous vector, where the component i basis
    vector carries the weight of variable i; None when inhomogeneous."""
    ring = v.ring
    degs = {ring.weighted_degree(m) + ring.weights[comp] for (comp, m) in v.terms}
    if not degs:
        return 0
    if len(degs) == 1:
        return degs.pop()
    return None


# ---------------------------------------------------------------------------
# Formatting (parse_polynomial round-trips these forms)
# ---------------------------------------------------------------------------

def format_monomial(ring: PolyRing, m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for i, e in m:
        parts.append(ring.names[i] if e == 1 else f"{ring.names[i]}^{e}")
    return "*".join(parts)


def _coefficient_text(c: FieldElement) -> tuple:
    """(sign, magnitude text, needs_parens) for use inside a term."""
    kind = c.field.kind
    if kind == RATIONAL_FUNCTIONS:
        text = format_scalar(c)
        num, den = c.payload
        simple = den == (1,) and sum(1 for x in num if x) == 1
        return "+", text, not simple
    if kind == RATIONALS:
        f = c.payload
        sign = "-" if f < 0 else "+"
        mag = -f if f < 0 else f
        text = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        return sign, text, False
    return "+", str(c.payload), False


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        sign, text, parens = _coefficient_text(c)
        mono = format_monomial(p.ring, m)
        if not m:
            body = text
        elif text == "1":
            body = mono
        else:
            body = f"({text})*{mono}" if parens else f"{text}*{mono}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_vector(v: ModuleVector) -> str:
    comps = [format_polynomial(v.component(i)) for i in range(v.rank)]
    return "(" + ", ".join(comps) + ")"
