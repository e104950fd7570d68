"""Seeded randomized checks over the whole surface, with JSON reports.

Each suite runs a fixed number of independent trials; trial i draws all of
its randomness from a generator seeded by (seed, i), so reports are
reproducible and byte-identical across runs.  A report never hides a
failure: passed + len(failures) == trials always holds.
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from . import matrices
from .affine import (
    affine_lemma_suite,
    centralizes,
    elementary_auto,
    embed_lower_linear,
    identity_auto,
    linear_auto,
    normalizes_torus,
    permutation_auto,
    to_cremona,
    torus_auto,
    translation_auto,
)
from .cocycles import Cocycle, coboundary, trivialize, validate_cocycle
from .cremona import CremonaMap, map_str, standard_involution
from .deformation import (
    build_family,
    commutator_family,
    extendability,
    limit_vs_jacobian,
    scaling_map,
)
from .errors import BiratError, NotACocycleError, PreconditionError
from .linear import (
    DieudonneAutomorphism,
    ProjLinear,
    ProjPoint,
    Transvection,
    gauss_decompose,
    in_congruence_subgroup,
    matrix_str,
    move_point_to_origin,
    origin_point,
    transvection_bound,
    transvection_product,
    two_fixed_point_automorphism,
)
from .poly import (
    Polynomial,
    RationalFunction,
    divides,
    exact_div,
    jacobian,
    parse_poly,
    poly_gcd,
    poly_str,
)
from .scalars import (
    QI,
    QQ,
    FieldKind,
    conjugation,
    frobenius,
    identity_automorphism,
)

SUITE_NAMES = (
    "polynomials",
    "cremona",
    "deformation",
    "linear",
    "affineauto",
    "cocycles",
)


@dataclass
class SuiteReport:
    """Outcome of one suite run; serializes to a stable JSON document."""

    suite: str
    seed: int
    trials: int
    passed: int
    failures: list

    def __post_init__(self):
        if self.passed + len(self.failures) != self.trials:
            raise PreconditionError("passed plus failures must equal trials")

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            "schema": 1,
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failures": [dict(f) for f in self.failures],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        if data.get("schema") != 1:
            raise PreconditionError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            data["suite"],
            data["seed"],
            data["trials"],
            data["passed"],
            [dict(f) for f in data["failures"]],
        )

    def summary_line(self):
        state = "ok" if self.ok else f"{len(self.failures)} failed"
        return f"{self.suite}: {self.passed}/{self.trials} passed ({state})"


def _trial_rng(seed, index):
    return random.Random(seed * 1000003 + index)


def _fail(failures, case, inputs, expected, actual):
    failures.append(
        {"case": case, "inputs": inputs, "expected": expected, "actual": actual}
    )


def _check(failures, ok, case, inputs, expected, actual):
    if not ok:
        _fail(failures, case, inputs, expected, actual)
    return ok


# ---------------------------------------------------------------------------
# random inputs


def rand_fraction(rng, height=6):
    return Fraction(rng.randint(-height, height), rng.randint(1, 3))


def rand_scalar(rng, field, nonzero=False, height=6):
    while True:
        if field.kind is FieldKind.RATIONAL:
            s = field.from_fraction(rand_fraction(rng, height))
        elif field.kind is FieldKind.GAUSSIAN_RATIONAL:
            s = field.from_pair(rand_fraction(rng, height), rand_fraction(rng, height))
        else:
            s = field.from_int(rng.randrange(field.modulus))
        if s or not nonzero:
            return s


def rand_poly(rng, field, nvars, max_degree, max_terms=4, nonzero=False, no_constant=False):
    while True:
        acc = Polynomial.zero(field, nvars)
        lo = 1 if no_constant else 0
        for _ in range(rng.randint(1, max_terms)):
            total = rng.randint(lo, max_degree)
            exps = [0] * nvars
            for _ in range(total):
                exps[rng.randrange(nvars)] += 1
            acc = acc + Polynomial.monomial(
                field, nvars, exps, rand_scalar(rng, field, nonzero=True)
            )
        if acc or not nonzero:
            return acc


def rand_proj_point(rng, field, dim):
    while True:
        coords = [rand_scalar(rng, field, height=3) for _ in range(dim + 1)]
        if any(coords):
            return ProjPoint(field, coords)


def rand_invertible(rng, field, n, height=3):
    while True:
        rows = [
            [rand_scalar(rng, field, height=height) for _ in range(n)] for _ in range(n)
        ]
        m = matrices.from_rows(field, rows)
        if matrices.det(m):
            return m


def rand_proj_linear(rng, field, dim):
    return ProjLinear(field, rand_invertible(rng, field, dim + 1))


def rand_transvection(rng, field, n, height=3):
    i = rng.randrange(n)
    j = rng.randrange(n - 1)
    if j >= i:
        j += 1
    return Transvection(i, j, rand_scalar(rng, field, nonzero=True, height=height))


def rand_special_linear(rng, field, n, factors=6):
    ts = [rand_transvection(rng, field, n) for _ in range(rng.randint(1, factors))]
    return transvection_product(ts, field, n)


# ---------------------------------------------------------------------------
# random automorphisms of affine space


def rand_linear_fixing_origin(rng, field, d):
    return linear_auto(field, rand_invertible(rng, field, d))


def rand_shear(rng, field, d, max_degree, fix_origin=True):
    """An elementary automorphism adding a polynomial in the other variables."""
    i = rng.randint(1, d)
    others = [v for v in range(d) if v != i - 1]
    while True:
        acc = Polynomial.zero(field, d)
        lo = 1 if fix_origin else 0
        for _ in range(rng.randint(1, 3)):
            total = rng.randint(lo, max_degree)
            exps = [0] * d
            for _ in range(total):
                exps[rng.choice(others)] += 1
            acc = acc + Polynomial.monomial(
                field, d, exps, rand_scalar(rng, field, nonzero=True, height=3)
            )
        if not fix_origin or acc.constant_term() == field.zero():
            return elementary_auto(field, d, i, acc)


def rand_origin_fixing_auto(rng, field, d, degree_cap=6):
    g = rand_linear_fixing_origin(rng, field, d)
    for _ in range(rng.randint(1, 3)):
        budget = degree_cap // max(g.degree, 1)
        if budget >= 2 and rng.random() < 0.7:
            e = rand_shear(rng, field, d, rng.randint(2, min(3, budget)))
            g = g.compose(e) if rng.random() < 0.5 else e.compose(g)
        else:
            g = g.compose(rand_linear_fixing_origin(rng, field, d))
    return g


def rand_affine_auto(rng, field, d, degree_cap=6):
    g = rand_origin_fixing_auto(rng, field, d, degree_cap)
    if rng.random() < 0.5:
        shift = [rand_scalar(rng, field, height=3) for _ in range(d)]
        g = translation_auto(field, shift).compose(g)
    return g


# ---------------------------------------------------------------------------
# corpus of maps around the origin chart point [1:0:...:0]


def _involution_fixing_origin(field, d):
    """The standard involution conjugated so that it fixes [1:0:...:0]."""
    sig = standard_involution(field, d)
    ones = ProjPoint(field, [field.one()] * (d + 1))
    m = move_point_to_origin(ones)
    front = CremonaMap.from_proj_linear(m)
    back = CremonaMap.from_proj_linear(m.inverse())
    return front.compose(sig).compose(back)


def corpus_positive_map(rng, field, d, degree_cap=6):
    """A map fixing [1:0:...:0] with an invertible derivative there."""
    style = rng.random()
    if style < 0.45:
        return to_cremona(rand_origin_fixing_auto(rng, field, d, degree_cap))
    g = _involution_fixing_origin(field, d)
    left = to_cremona(rand_linear_fixing_origin(rng, field, d))
    right = to_cremona(rand_linear_fixing_origin(rng, field, d))
    g = left.compose(g).compose(right)
    if style > 0.85 and degree_cap // d >= 2:
        h = to_cremona(rand_origin_fixing_auto(rng, field, d, degree_cap // d))
        g = h.compose(g) if rng.random() < 0.5 else g.compose(h)
    return g


def corpus_base_point_map(rng, field, d, degree_cap=6):
    """A map with a base point at [1:0:...:0]."""
    sig = standard_involution(field, d)
    inner = to_cremona(rand_origin_fixing_auto(rng, field, d, max(degree_cap // d, 1)))
    outer = CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
    return outer.compose(sig).compose(inner)


def corpus_pole_map(rng, field, d, degree_cap=6):
    """A map sending [1:0:...:0] out of the affine chart."""
    g = to_cremona(rand_origin_fixing_auto(rng, field, d, degree_cap))
    while True:
        rows = rand_invertible(rng, field, d + 1)
        rows[0][0] = g.field.zero()
        if matrices.det(rows):
            break
    return CremonaMap.from_proj_linear(ProjLinear(g.field, rows)).compose(g)


def corpus_translation_map(rng, field, d, degree_cap=6):
    """A map moving the origin inside the chart; returns (map, shift)."""
    g = to_cremona(rand_origin_fixing_auto(rng, field, d, degree_cap))
    while True:
        shift = [rand_scalar(rng, field, height=3) for _ in range(d)]
        if any(shift):
            break
    t = to_cremona(translation_auto(field, shift))
    return t.compose(g), shift


def corpus_singular_map(rng, field, d, degree_cap=6):
    """A map fixing the origin whose derivative there is singular."""
    n = d + 1
    x = [Polynomial.variable(field, n, v) for v in range(n)]
    comps = [x[0] * x[0], x[0] * x[1], x[1] * x[2]]
    for v in range(3, n):
        comps.append(x[0] * x[v])
    w = CremonaMap(comps)
    left = to_cremona(rand_linear_fixing_origin(rng, field, d))
    right = to_cremona(rand_linear_fixing_origin(rng, field, d))
    f = left.compose(w).compose(right)
    if degree_cap >= 4 and rng.random() < 0.4:
        h = to_cremona(rand_origin_fixing_auto(rng, field, d, degree_cap // 2))
        f = h.compose(f) if rng.random() < 0.5 else f.compose(h)
    return f


# ---------------------------------------------------------------------------
# suites


def _suite_polynomials(seed, trials, field, dim):
    nv = max(1, dim)
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        kind = i % 6
        try:
            if kind == 0:
                a = rand_poly(rng, field, nv, 3)
                b = rand_poly(rng, field, nv, 3)
                c = rand_poly(rng, field, nv, 2)
                ok = (
                    (a + b) + c == a + (b + c)
                    and a * (b + c) == a * b + a * c
                    and a * b == b * a
                )
                _check(
                    failures,
                    ok,
                    f"ring-axioms/{i}",
                    f"a={poly_str(a)}; b={poly_str(b)}; c={poly_str(c)}",
                    "ring identities hold",
                    "an identity fails",
                )
            elif kind == 1:
                p = rand_poly(rng, field, nv, 4, max_terms=5)
                comps = p.homogeneous_components()
                total = Polynomial.zero(field, nv)
                shape = True
                for deg, part in comps.items():
                    total = total + part
                    shape = shape and part.is_homogeneous and part.total_degree == deg
                _check(
                    failures,
                    shape and total == p,
                    f"graded-pieces/{i}",
                    f"p={poly_str(p)}",
                    "pieces are homogeneous and sum back",
                    "decomposition broken",
                )
            elif kind == 2:
                g = rand_poly(rng, field, nv, 2, max_terms=2, nonzero=True)
                a = rand_poly(rng, field, nv, 2, max_terms=2, nonzero=True)
                b = rand_poly(rng, field, nv, 2, max_terms=2, nonzero=True)
                x, y = g * a, g * b
                d0 = poly_gcd(x, y)
                cof = poly_gcd(exact_div(x, d0), exact_div(y, d0))
                ok = divides(d0, x) and divides(d0, y) and divides(g, d0) and cof.is_constant
                _check(
                    failures,
                    ok,
                    f"gcd/{i}",
                    f"g={poly_str(g)}; a={poly_str(a)}; b={poly_str(b)}",
                    "gcd divides both, contains g, coprime cofactors",
                    f"gcd={poly_str(d0)}",
                )
            elif kind == 3:
                a = rand_poly(rng, field, nv, 3)
                b = rand_poly(rng, field, nv, 3)
                pt = [rand_scalar(rng, field, height=3) for _ in range(nv)]
                ok = (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt) and (
                    a + b
                ).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)
                _check(
                    failures,
                    ok,
                    f"evaluation/{i}",
                    f"a={poly_str(a)}; b={poly_str(b)}; pt={[str(v) for v in pt]}",
                    "evaluation respects + and *",
                    "homomorphism fails",
                )
            elif kind == 4:
                fs = [rand_poly(rng, field, nv, 2, max_terms=3) for _ in range(nv)]
                gs = [rand_poly(rng, field, nv, 2, max_terms=3) for _ in range(nv)]
                pt = [rand_scalar(rng, field, height=2) for _ in range(nv)]
                hs = [f.substitute(gs) for f in fs]
                jh = jacobian([RationalFunction(h) for h in hs], pt)
                gpt = [g.evaluate(pt) for g in gs]
                jf = jacobian([RationalFunction(f) for f in fs], gpt)
                jg = jacobian([RationalFunction(g) for g in gs], pt)
                _check(
                    failures,
                    matrices.mat_eq(jh, matrices.mat_mul(jf, jg)),
                    f"chain-rule/{i}",
                    f"f={[poly_str(f) for f in fs]}; g={[poly_str(g) for g in gs]}",
                    "J(f o g) = J(f)|_g * J(g)",
                    "chain rule fails",
                )
            else:
                p = rand_poly(rng, field, nv, 4, max_terms=5)
                back = parse_poly(poly_str(p), field, nv)
                _check(
                    failures,
                    back == p,
                    f"io-round-trip/{i}",
                    f"p={poly_str(p)}",
                    poly_str(p),
                    poly_str(back),
                )
        except BiratError as e:
            _fail(failures, f"polynomials/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("polynomials", seed, trials, trials - len(failures), failures)


def _rand_small_cremona(rng, field, d):
    r = rng.random()
    if r < 0.3:
        return CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
    if r < 0.55:
        return standard_involution(field, d)
    if r < 0.8:
        m = rand_proj_linear(rng, field, d)
        front = CremonaMap.from_proj_linear(m)
        back = CremonaMap.from_proj_linear(m.inverse())
        return front.compose(standard_involution(field, d)).compose(back)
    return to_cremona(rand_affine_auto(rng, field, d, 2))


def _suite_cremona(seed, trials, field, dim):
    d = max(2, dim)
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        kind = i % 6
        try:
            if kind == 0:
                f = _rand_small_cremona(rng, field, d)
                g = _rand_small_cremona(rng, field, d)
                fg = f.compose(g)
                # a trial where every sampled point is indeterminate is vacuous
                for _ in range(8):
                    pt = rand_proj_point(rng, field, d)
                    if g.is_indeterminate_at(pt) or fg.is_indeterminate_at(pt):
                        continue
                    q = g.apply(pt)
                    if f.is_indeterminate_at(q):
                        continue
                    _check(
                        failures,
                        fg.apply(pt) == f.apply(q),
                        f"compose-pointwise/{i}",
                        f"f={map_str(f)}; g={map_str(g)}; pt={pt}",
                        "(f o g)(p) = f(g(p))",
                        "values disagree",
                    )
                    break
            elif kind == 1:
                f = _rand_small_cremona(rng, field, d)
                l = CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
                ok = (
                    l.compose(f).degree == f.degree
                    and f.compose(l).degree == f.degree
                )
                _check(
                    failures,
                    ok,
                    f"linear-degree/{i}",
                    f"f={map_str(f)}; l={map_str(l)}",
                    "composition with a linear map keeps the degree",
                    "degree changed",
                )
            elif kind == 2:
                f = _rand_small_cremona(rng, field, d)
                g = _rand_small_cremona(rng, field, d)
                h = CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
                _check(
                    failures,
                    f.compose(g).compose(h) == f.compose(g.compose(h)),
                    f"associativity/{i}",
                    f"f={map_str(f)}; g={map_str(g)}; h={map_str(h)}",
                    "(f o g) o h = f o (g o h)",
                    "associativity fails",
                )
            elif kind == 3:
                f = _rand_small_cremona(rng, field, d)
                m = rand_poly(rng, field, d + 1, 2, max_terms=2, nonzero=True, no_constant=True)
                m = m.homogeneous_part(m.total_degree)
                if m is None or m.is_zero:
                    m = Polynomial.variable(field, d + 1, 0)
                scaled = CremonaMap([c * m for c in f.components])
                _check(
                    failures,
                    scaled == f and scaled.degree == f.degree,
                    f"common-factor/{i}",
                    f"f={map_str(f)}; m={poly_str(m)}",
                    "common factors are removed on construction",
                    f"got {map_str(scaled)}",
                )
            elif kind == 4:
                f = _rand_small_cremona(rng, field, d)
                back = f
                try:
                    from .cremona import from_chart

                    back = from_chart(f.to_chart())
                except BiratError:
                    pass
                _check(
                    failures,
                    back == f,
                    f"chart-round-trip/{i}",
                    f"f={map_str(f)}",
                    map_str(f),
                    map_str(back),
                )
            else:
                sig = standard_involution(field, d)
                ident = CremonaMap.identity(field, d)
                ok = sig.compose(sig) == ident
                l = rand_proj_linear(rng, field, d)
                lm = CremonaMap.from_proj_linear(l)
                pt = rand_proj_point(rng, field, d)
                ok = ok and lm.is_local_isomorphism(pt)
                _check(
                    failures,
                    ok,
                    f"involution-linear/{i}",
                    f"l={matrix_str(l.rows())}; pt={pt}",
                    "sigma^2 = id and linear maps are isomorphisms",
                    "check fails",
                )
        except BiratError as e:
            _fail(failures, f"cremona/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("cremona", seed, trials, trials - len(failures), failures)


def _suite_deformation(seed, trials, field, dim):
    d = max(2, dim)
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        kind = i % 7
        if kind == 5 and field.characteristic == 2:
            kind = 0
        try:
            if kind == 0:
                f = corpus_positive_map(rng, field, d)
                verdict = extendability(build_family(f))
                ok = verdict.extendable and limit_vs_jacobian(f)
                _check(
                    failures,
                    ok,
                    f"extendable-limit/{i}",
                    f"f={map_str(f)}",
                    "family extends and both limit routes agree",
                    str(verdict.to_dict()),
                )
            elif kind == 1:
                which = rng.random()
                if which < 0.4:
                    f = corpus_positive_map(rng, field, d)
                elif which < 0.7:
                    f = corpus_translation_map(rng, field, d)[0]
                else:
                    f = corpus_singular_map(rng, field, d)
                fam = build_family(f)
                t0 = rand_scalar(rng, field, nonzero=True, height=3)
                beta = scaling_map(t0, d)
                beta_inv = scaling_map(t0.inverse(), d)
                rho = beta_inv.compose(f).compose(beta)
                left = tuple(fam.specialize(t0))
                right = tuple(rho.to_chart().fractions())
                _check(
                    failures,
                    left == right,
                    f"specialize/{i}",
                    f"f={map_str(f)}; t0={t0}",
                    "family at t0 equals the conjugated chart",
                    "charts differ",
                )
            elif kind == 2:
                f = corpus_base_point_map(rng, field, d)
                verdict = extendability(build_family(f))
                ok = not verdict.extendable and any(verdict.q_i0_zero)
                _check(
                    failures,
                    ok,
                    f"base-point/{i}",
                    f"f={map_str(f)}",
                    "a denominator degenerates at the point",
                    str(verdict.to_dict()),
                )
            elif kind == 3:
                f, shift = corpus_translation_map(rng, field, d)
                verdict = extendability(build_family(f))
                want = tuple(bool(s) for s in shift)
                ok = (
                    not verdict.extendable
                    and verdict.p_i0_nonzero == want
                    and not any(verdict.q_i0_zero)
                )
                _check(
                    failures,
                    ok,
                    f"moved-point/{i}",
                    f"f={map_str(f)}; shift={[str(s) for s in shift]}",
                    f"numerator flags {want}, clean denominators",
                    str(verdict.to_dict()),
                )
            elif kind == 4:
                f = corpus_singular_map(rng, field, d)
                verdict = extendability(build_family(f))
                ok = (
                    not verdict.extendable
                    and verdict.jacobian_singular
                    and not any(verdict.p_i0_nonzero)
                    and not any(verdict.q_i0_zero)
                    and verdict.limit is None
                )
                _check(
                    failures,
                    ok,
                    f"singular-derivative/{i}",
                    f"f={map_str(f)}",
                    "only the derivative obstruction fires",
                    str(verdict.to_dict()),
                )
            elif kind == 5:
                f = CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
                p = rand_proj_point(rng, field, d)
                tries = 0
                while f.apply(p) == p:
                    p = rand_proj_point(rng, field, d)
                    tries += 1
                    if tries > 16:
                        f = CremonaMap.from_proj_linear(rand_proj_linear(rng, field, d))
                        tries = 0
                q = f.apply(p)
                lam = field.from_int(2)
                alpha = two_fixed_point_automorphism(p, q, lam)
                fam = commutator_family(f, alpha, p)
                verdict = extendability(fam)
                _check(
                    failures,
                    verdict.extendable and verdict.limit is not None,
                    f"commutator/{i}",
                    f"f={map_str(f)}; p={p}",
                    "the commutator family extends",
                    str(verdict.to_dict()),
                )
            else:
                s = rand_scalar(rng, field, nonzero=True, height=3)
                t = rand_scalar(rng, field, nonzero=True, height=3)
                ok = scaling_map(s, d).compose(scaling_map(t, d)) == scaling_map(s * t, d)
                f = corpus_positive_map(rng, field, d)
                fam = build_family(f)
                one = field.one()
                ok = ok and tuple(fam.specialize(one)) == tuple(f.to_chart().fractions())
                _check(
                    failures,
                    ok,
                    f"scaling-group/{i}",
                    f"s={s}; t={t}; f={map_str(f)}",
                    "scalings compose and t=1 recovers the chart",
                    "identities fail",
                )
        except BiratError as e:
            _fail(failures, f"deformation/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("deformation", seed, trials, trials - len(failures), failures)


def _field_twist(field):
    if field.kind is FieldKind.GAUSSIAN_RATIONAL:
        return conjugation(field)
    if field.kind is FieldKind.PRIME_FIELD:
        return frobenius(field)
    return identity_automorphism(field)


def _suite_linear(seed, trials, field, dim):
    n = max(2, dim) + 1
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        kind = i % 6
        try:
            if kind == 0:
                g = rand_proj_linear(rng, field, n - 1)
                h = rand_proj_linear(rng, field, n - 1)
                ok = (
                    g.transpose_inverse().transpose_inverse() == g
                    and (g * h).transpose_inverse()
                    == g.transpose_inverse() * h.transpose_inverse()
                )
                _check(
                    failures,
                    ok,
                    f"dual/{i}",
                    f"g={matrix_str(g.rows())}; h={matrix_str(h.rows())}",
                    "the dual is an involutive homomorphism",
                    "identity fails",
                )
            elif kind == 1:
                alpha = _field_twist(field)
                g = rand_proj_linear(rng, field, n - 1)
                h = rand_proj_linear(rng, field, n - 1)
                ok = (g * h).twist(alpha) == g.twist(alpha) * h.twist(alpha)
                if not alpha.is_identity_action:
                    ok = ok and g.twist(alpha).twist(alpha) == g
                _check(
                    failures,
                    ok,
                    f"twist/{i}",
                    f"g={matrix_str(g.rows())}; h={matrix_str(h.rows())}",
                    "entrywise field action is a homomorphism",
                    "identity fails",
                )
            elif kind == 2:
                h = rand_proj_linear(rng, field, n - 1)
                alpha = _field_twist(field) if rng.random() < 0.5 else identity_automorphism(field)
                dual = rng.random() < 0.5
                phi = DieudonneAutomorphism(h, alpha, dual)
                g1 = rand_proj_linear(rng, field, n - 1)
                g2 = rand_proj_linear(rng, field, n - 1)
                _check(
                    failures,
                    phi(g1 * g2) == phi(g1) * phi(g2),
                    f"standard-form/{i}",
                    f"h={matrix_str(h.rows())}; dual={dual}",
                    "the standard form is multiplicative",
                    "products disagree",
                )
            elif kind == 3:
                m = rand_special_linear(rng, field, n)
                ts = gauss_decompose(m)
                back = transvection_product(ts, field, n)
                ok = matrices.mat_eq(back, m) and len(ts) <= transvection_bound(n - 1)
                _check(
                    failures,
                    ok,
                    f"transvections/{i}",
                    f"m={matrix_str(m)}",
                    f"product of at most {transvection_bound(n - 1)} transvections",
                    f"{len(ts)} factors, match={matrices.mat_eq(back, m)}",
                )
            elif kind == 4:
                p = 3
                k = rng.randint(1, 3)
                a = [[int(r == c) for c in range(n)] for r in range(n)]
                for _ in range(k):
                    r = rng.randrange(n)
                    c = rng.randrange(n - 1)
                    if c >= r:
                        c += 1
                    t = [[int(x == y) for y in range(n)] for x in range(n)]
                    t[r][c] = p * rng.randint(1, 2)
                    a = [
                        [sum(a[x][z] * t[z][y] for z in range(n)) for y in range(n)]
                        for x in range(n)
                    ]
                bad = [[int(r == c) for c in range(n)] for r in range(n)]
                bad[0][1] = 1
                ok = in_congruence_subgroup(a, p) and not in_congruence_subgroup(bad, p)
                _check(
                    failures,
                    ok,
                    f"congruence/{i}",
                    f"a={a}",
                    "membership detects the level",
                    "membership wrong",
                )
            else:
                if field.kind is FieldKind.PRIME_FIELD and field.modulus == 2:
                    from .errors import BadEigenvalueError

                    p0 = origin_point(field, n - 1)
                    q0 = ProjPoint(field, [field.zero()] * (n - 1) + [field.one()])
                    try:
                        two_fixed_point_automorphism(p0, q0, field.one())
                        _fail(
                            failures,
                            f"two-points/{i}",
                            "lam=1 over F2",
                            "eigenvalue 1 rejected",
                            "no error raised",
                        )
                    except BadEigenvalueError:
                        pass
                else:
                    p0 = rand_proj_point(rng, field, n - 1)
                    q0 = rand_proj_point(rng, field, n - 1)
                    while q0 == p0:
                        q0 = rand_proj_point(rng, field, n - 1)
                    lam = rand_scalar(rng, field, nonzero=True)
                    while lam == field.one():
                        lam = rand_scalar(rng, field, nonzero=True)
                    alpha = two_fixed_point_automorphism(p0, q0, lam)
                    ok = alpha.apply(p0) == p0 and alpha.apply(q0) == q0
                    others = 0
                    for _ in range(6):
                        r = rand_proj_point(rng, field, n - 1)
                        if r != p0 and r != q0 and alpha.apply(r) == r:
                            others += 1
                    # the fixed set is exactly {p, q}, so samples never land on it
                    ok = ok and others == 0
                    _check(
                        failures,
                        ok,
                        f"two-points/{i}",
                        f"p={p0}; q={q0}; lam={lam}",
                        "exactly the two chosen points are fixed",
                        "fixed set wrong",
                    )
        except BiratError as e:
            _fail(failures, f"linear/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("linear", seed, trials, trials - len(failures), failures)


def _suite_affineauto(seed, trials, field, dim):
    d = max(2, dim)
    char = field.characteristic
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        kind = i % 6
        if kind == 2 and char != 0 and field.modulus - 1 < d:
            kind = 0
        if kind == 4 and char == 2:
            kind = 3
        try:
            if kind == 0:
                f = rand_affine_auto(rng, field, d, 3)
                g = rand_affine_auto(rng, field, d, 2)
                ident = identity_auto(field, d)
                ok = (
                    f.compose(f.inverted()) == ident
                    and f.inverted().compose(f) == ident
                    and f.compose(g).inverted() == g.inverted().compose(f.inverted())
                )
                _check(
                    failures,
                    ok,
                    f"inversion/{i}",
                    f"f={f}; g={g}",
                    "inverses compose contravariantly",
                    "identity fails",
                )
            elif kind == 1:
                f = rand_affine_auto(rng, field, d, 3)
                g = rand_affine_auto(rng, field, d, 2)
                ok = f.compose(g).degree <= f.degree * g.degree
                pt = [rand_scalar(rng, field, height=3) for _ in range(d)]
                ok = ok and f.compose(g).apply(pt) == f.apply(g.apply(pt))
                _check(
                    failures,
                    ok,
                    f"composition/{i}",
                    f"f={f}; g={g}; pt={[str(v) for v in pt]}",
                    "degree is submultiplicative, evaluation matches",
                    "check fails",
                )
            elif kind == 2:
                perm = list(range(d))
                rng.shuffle(perm)
                diag = [rand_scalar(rng, field, nonzero=True) for _ in range(d)]
                mono = permutation_auto(field, perm).compose(torus_auto(field, diag))
                ok = normalizes_torus(mono, trials=4, seed=seed + i)
                shear = elementary_auto(
                    field, d, 1, Polynomial.variable(field, d, 1) ** 2
                )
                ok = ok and not normalizes_torus(shear, trials=4, seed=seed + i)
                _check(
                    failures,
                    ok,
                    f"torus-normalizer/{i}",
                    f"perm={perm}; diag={[str(a) for a in diag]}",
                    "monomial maps normalize, shears do not",
                    "normalizer test wrong",
                )
            elif kind == 3:
                perm = list(range(d))
                rng.shuffle(perm)
                diag = [rand_scalar(rng, field, nonzero=True) for _ in range(d)]
                p_auto = permutation_auto(field, perm)
                lhs = p_auto.compose(torus_auto(field, diag)).compose(p_auto.inverted())
                moved = [None] * d
                for src in range(d):
                    moved[perm[src]] = diag[src]
                rhs = torus_auto(field, moved)
                _check(
                    failures,
                    lhs == rhs,
                    f"torus-conjugation/{i}",
                    f"perm={perm}; diag={[str(a) for a in diag]}",
                    "conjugation permutes the diagonal",
                    "conjugation wrong",
                )
            elif kind == 4:
                trans = translation_auto(
                    field, [field.one()] + [field.zero()] * (d - 1)
                )
                lower = rand_invertible(rng, field, d - 1)
                emb = embed_lower_linear(field, lower, d)
                stretch = torus_auto(field, [2] + [1] * (d - 1))
                ok = centralizes(trans, [emb]) and not centralizes(trans, [stretch])
                _check(
                    failures,
                    ok,
                    f"centralizer/{i}",
                    f"lower={matrix_str(lower)}",
                    "the first-coordinate step commutes with the block, not the stretch",
                    "centralizer test wrong",
                )
            else:
                params = [rng.randint(1, 30) for _ in range(3)]
                report = affine_lemma_suite(field, d, params=params)
                _check(
                    failures,
                    report.all_passed,
                    f"shear-identities/{i}",
                    f"params={params}",
                    "all identities hold",
                    str([c for c in report.checks if not c[2]]),
                )
        except BiratError as e:
            _fail(failures, f"affineauto/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("affineauto", seed, trials, trials - len(failures), failures)


def _rand_qi_invertible(rng, n):
    while True:
        rows = [
            [QI.from_pair(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))) for _ in range(n)]
            for _ in range(n)
        ]
        m = matrices.from_rows(QI, rows)
        if matrices.det(m):
            return m


def _suite_cocycles(seed, trials, field, dim):
    failures = []
    for i in range(trials):
        rng = _trial_rng(seed, i)
        n = 1 + i % 3
        kind = i % 3
        try:
            if kind == 0:
                a = _rand_qi_invertible(rng, n)
                nu = coboundary(a)
                _check(
                    failures,
                    validate_cocycle(nu),
                    f"coboundary/{i}",
                    f"a={matrix_str(a)}",
                    "every coboundary satisfies the cocycle condition",
                    "condition fails",
                )
            elif kind == 1:
                a = _rand_qi_invertible(rng, n)
                nu = coboundary(a)
                b = trivialize(nu, seed=seed + i)
                back = coboundary(b)
                _check(
                    failures,
                    matrices.mat_eq(back.value("sigma"), nu.value("sigma")),
                    f"split/{i}",
                    f"a={matrix_str(a)}",
                    "the split reproduces the cocycle",
                    f"b={matrix_str(b)}",
                )
            else:
                a = _rand_qi_invertible(rng, n)
                nu = coboundary(a)
                two = matrices.scale(nu.value("sigma"), QI.from_int(2))
                bad = Cocycle.from_matrix(two)
                ok = not validate_cocycle(bad)
                try:
                    trivialize(bad)
                    ok = False
                except NotACocycleError:
                    pass
                _check(
                    failures,
                    ok,
                    f"reject/{i}",
                    f"bad={matrix_str(two)}",
                    "scaled values fail the condition and are rejected",
                    "accepted a non-cocycle",
                )
        except BiratError as e:
            _fail(failures, f"cocycles/{i}", "trial raised", "no error", f"{e.code}: {e}")
    return SuiteReport("cocycles", seed, trials, trials - len(failures), failures)


_SUITES = {
    "polynomials": _suite_polynomials,
    "cremona": _suite_cremona,
    "deformation": _suite_deformation,
    "linear": _suite_linear,
    "affineauto": _suite_affineauto,
    "cocycles": _suite_cocycles,
}


def run_suite(name, seed=0, trials=25, field=QQ, dim=2):
    """Run one named suite and return its report."""
    if name not in _SUITES:
        raise PreconditionError(f"unknown suite {name!r}; pick from {', '.join(SUITE_NAMES)}")
    if trials < 1:
        raise PreconditionError("at least one trial is required")
    if dim < 2:
        raise PreconditionError("the suites need dimension at least 2")
    return _SUITES[name](seed, trials, field, dim)


def run_all(seed=0, trials=25, field=QQ, dim=2):
    """Run every suite with shared parameters, in a fixed order."""
    return [run_suite(name, seed, trials, field, dim) for name in SUITE_NAMES]
