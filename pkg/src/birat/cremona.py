"""Birational transformations of projective space.

A map is a (d+1)-tuple of homogeneous polynomials of one common degree with
no common factor, scaled so the first nonzero component is monic in grevlex
order.  Composition substitutes and re-reduces; the degree of a map is the
common degree after reduction, so degrees are submultiplicative but not
multiplicative (the standard quadratic involution squares to the identity).

The affine chart x0 != 0 is the distinguished one: to_chart produces the d
reduced rational functions describing the map there, remembering their
homogeneous pieces, and from_chart homogenizes back.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrices
from .errors import (
    ChartDegenerateError,
    DegreeMismatchError,
    DimMismatchError,
    EmptyFamilyError,
    FieldMismatchError,
    IndeterminateAtPointError,
    NotHomogeneousError,
    ParseError,
    ZeroMapError,
)
from .linear import ProjLinear, ProjPoint, move_point_to_origin, origin_point
from .poly import (
    Polynomial,
    RationalFunction,
    dehomogenize,
    exact_div,
    homogenize,
    jacobian,
    parse_poly,
    poly_gcd_list,
    poly_lcm,
    poly_str,
    split_group,
)


class CremonaMap:
    """A birational-style self-map of P^d in canonical reduced form."""

    __slots__ = ("field", "components", "_chart")

    def __init__(self, components):
        comps = list(components)
        if len(comps) < 2:
            raise DimMismatchError("need at least 2 components")
        field = comps[0].field
        nvars = comps[0].nvars
        if nvars != len(comps):
            raise DimMismatchError(
                f"{len(comps)} components need {len(comps)} variables, got {nvars}"
            )
        degree = None
        for c in comps:
            if c.field != field:
                raise FieldMismatchError("components over different fields")
            if c.nvars != nvars:
                raise DimMismatchError("components with different arities")
            if not c.is_homogeneous:
                raise NotHomogeneousError(f"component {poly_str(c)} is not homogeneous")
            if not c.is_zero:
                if degree is None:
                    degree = c.total_degree
                elif c.total_degree != degree:
                    raise DegreeMismatchError(
                        f"components of degrees {degree} and {c.total_degree}"
                    )
        if degree is None:
            raise ZeroMapError("all components vanish")
        g = poly_gcd_list(comps)
        if not g.is_constant:
            comps = [exact_div(c, g) if not c.is_zero else c for c in comps]
            degree -= g.total_degree
        if degree < 1:
            raise ZeroMapError("map reduces to a constant tuple")
        lead = next(c for c in comps if not c.is_zero)
        lc = lead.leading_coefficient()
        if lc != 1:
            inv = lc.inverse()
            comps = [c * inv for c in comps]
        self.field = field
        self.components = tuple(comps)
        self._chart = None

    @classmethod
    def identity(cls, field, dim):
        n = dim + 1
        return cls([Polynomial.variable(field, n, v) for v in range(n)])

    @classmethod
    def from_proj_linear(cls, m):
        comps = []
        n = m.dim + 1
        for row in m.matrix:
            terms = {}
            for j, c in enumerate(row):
                if c:
                    terms[tuple(1 if t == j else 0 for t in range(n))] = c
            comps.append(Polynomial(m.field, n, terms))
        return cls(comps)

    @property
    def dim(self):
        return len(self.components) - 1

    @property
    def degree(self):
        return next(c for c in self.components if not c.is_zero).total_degree

    def _is_identity(self):
        for v, c in enumerate(self.components):
            if len(c.terms) != 1:
                return False
            ((exps, coef),) = c.terms.items()
            if coef != 1 or sum(exps) != 1 or exps[v] != 1:
                return False
        return True

    def compose(self, other):
        """self after other, reduced."""
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if self.dim != other.dim:
            raise DimMismatchError(f"dimension {self.dim} vs {other.dim}")
        if other._is_identity():
            return self
        if self._is_identity():
            return other
        subs = list(other.components)
        comps = [c.substitute(subs) for c in self.components]
        if all(c.is_zero for c in comps):
            raise ZeroMapError("composition vanishes identically")
        return CremonaMap(comps)

    def apply(self, point):
        if not isinstance(point, ProjPoint) or point.field != self.field:
            raise FieldMismatchError("point over the wrong field")
        if point.dim != self.dim:
            raise DimMismatchError(f"point in P^{point.dim}, map on P^{self.dim}")
        vals = [c.evaluate(list(point.coords)) for c in self.components]
        if not any(vals):
            raise IndeterminateAtPointError(f"map is indeterminate at {point}")
        return ProjPoint(self.field, vals)

    def is_indeterminate_at(self, point):
        vals = [c.evaluate(list(point.coords)) for c in self.components]
        return not any(vals)

    def is_fixed_point(self, point):
        """True when the map is defined at the point and sends it to itself."""
        if self.is_indeterminate_at(point):
            return False
        return self.apply(point) == point

    def to_chart(self):
        """Chart form on x0 != 0: d reduced rational functions in x1..xd."""
        if self._chart is not None:
            return self._chart
        if self.components[0].is_zero:
            raise ChartDegenerateError("image lies in the hyperplane x0 = 0")
        den = dehomogenize(self.components[0])
        fractions = [
            RationalFunction(dehomogenize(c), den) for c in self.components[1:]
        ]
        self._chart = ChartDecomposition.from_fractions(self.field, self.dim, fractions)
        return self._chart

    def is_local_isomorphism(self, point):
        """Defined at the point with an invertible Jacobian there.

        Source and target are moved into the x0 != 0 chart first, so the test
        works at any point, fixed or not.
        """
        if self.is_indeterminate_at(point):
            return False
        image = self.apply(point)
        a = move_point_to_origin(point)
        b = move_point_to_origin(image)
        conj = CremonaMap.from_proj_linear(b).compose(self).compose(
            CremonaMap.from_proj_linear(a.inverse())
        )
        chart = conj.to_chart()
        origin = [self.field.zero()] * self.dim
        for f in chart.fractions():
            if not f.is_defined_at(origin):
                return False
        j = jacobian(chart.fractions(), origin)
        return bool(matrices.det(j))

    def __eq__(self, other):
        if not isinstance(other, CremonaMap):
            return NotImplemented
        return self.field == other.field and self.components == other.components

    def __str__(self):
        return map_str(self)

    def __repr__(self):
        return f"CremonaMap({self.field}, {self})"


@dataclass(frozen=True)
class ChartDecomposition:
    """Homogeneous pieces of the chart form of a map on x0 != 0.

    numerators[i][j] is the degree-j part of the (reduced) numerator of the
    i-th coordinate function, and likewise for denominators; reassembling the
    fractions recovers the chart form exactly.
    """

    field: object
    dim: int
    numerators: tuple
    denominators: tuple

    @classmethod
    def from_fractions(cls, field, dim, fractions):
        nums = []
        dens = []
        for f in fractions:
            nums.append(tuple(sorted(f.num.homogeneous_components().items())))
            dens.append(tuple(sorted(f.den.homogeneous_components().items())))
        return cls(field, dim, tuple(nums), tuple(dens))

    def numerator(self, i):
        acc = Polynomial.zero(self.field, self.dim)
        for _, part in self.numerators[i]:
            acc = acc + part
        return acc

    def denominator(self, i):
        acc = Polynomial.zero(self.field, self.dim)
        for _, part in self.denominators[i]:
            acc = acc + part
        return acc

    def fractions(self):
        return [
            RationalFunction(self.numerator(i), self.denominator(i))
            for i in range(self.dim)
        ]

    @property
    def degree(self):
        degs = [j for pieces in self.numerators + self.denominators for j, _ in pieces]
        return max(degs)


def from_chart(dec):
    """Homogenize a chart decomposition back to a map of P^d."""
    d = dec.dim
    fractions = dec.fractions()
    if all(f.is_zero for f in fractions):
        raise ZeroMapError("chart data describes the zero tuple")
    den = fractions[0].den
    for f in fractions[1:]:
        den = poly_lcm(den, f.den)
    nums = [f.num * exact_div(den, f.den) for f in fractions]
    e = max([den.total_degree] + [n.total_degree for n in nums if not n.is_zero])
    comps = [homogenize(den, e)] + [
        homogenize(n, e) if not n.is_zero else Polynomial.zero(dec.field, d + 1)
        for n in nums
    ]
    return CremonaMap(comps)


def chart_from_polys(polys):
    """Chart data of a polynomial map of the chart (denominators 1)."""
    field = polys[0].field
    dim = len(polys)
    return ChartDecomposition.from_fractions(
        field, dim, [RationalFunction(p) for p in polys]
    )


def max_degree(maps):
    """Largest degree in a family of maps; the family must be nonempty."""
    maps = list(maps)
    if not maps:
        raise EmptyFamilyError("no maps given")
    return max(m.degree for m in maps)


def standard_involution(field, dim=2):
    """The coordinate-wise inversion [x1*x2*...*xd : prod without x1 : ...]."""
    n = dim + 1
    comps = []
    for i in range(n):
        exps = tuple(0 if j == i else 1 for j in range(n))
        comps.append(Polynomial.monomial(field, n, exps))
    return CremonaMap(comps)


# ---------------------------------------------------------------------------
# text format: P^2: [x1*x2 : x0*x2 : x0*x1]


def parse_map(text, field):
    text = text.strip()
    if not text.startswith("P^"):
        raise ParseError("map text must start with P^<dim>:")
    head, _, body = text.partition(":")
    try:
        dim = int(head[2:])
    except ValueError:
        raise ParseError(f"bad dimension in {head!r}") from None
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("map components must be wrapped in [...]")
    parts = split_group(body[1:-1], ":")
    if len(parts) != dim + 1:
        raise DimMismatchError(f"expected {dim + 1} components, got {len(parts)}")
    comps = [parse_poly(part, field, dim + 1) for part in parts]
    return CremonaMap(comps)


def map_str(f):
    comps = " : ".join(poly_str(c) for c in f.components)
    return f"P^{f.dim}: [{comps}]"
