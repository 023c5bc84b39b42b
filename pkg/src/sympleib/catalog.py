"""Named algebra families with constraints, claims and a seeded verifier.

Each family packages one of the concrete models the library is built
around: the two- and four-dimensional bi-symplectic classification, the
flat example on the plane and on four-space, the solvable Lie algebra
rr(3,-1), and the parameterized extension families over two-dimensional
and four-dimensional cores.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .algebra import (
    Algebra,
    is_left_leibniz,
    is_lie,
    is_right_leibniz,
    is_symmetric_leibniz,
)
from .exactlin import Matrix, Rational, rat
from .extension import (
    ExtensionData,
    SymplecticLie,
    build_double_extension,
    build_rank_one,
    check_rank_one,
    check_reduced_system,
)
from .reporting import Check, SystemReport
from .symplectic import (
    SkewForm,
    form_from_pairs,
    is_bi_symplectic,
    is_symplectic_left,
    is_symplectic_right,
)

Params = dict[str, Rational]

CLAIMS = (
    "left-leibniz",
    "right-leibniz",
    "symmetric-leibniz",
    "left-symplectic",
    "right-symplectic",
    "bi-symplectic",
    "lie",
    "non-lie",
)


@dataclass(frozen=True)
class Constraint:
    """A polynomial predicate on parameters, required =0 or !=0."""

    name: str
    kind: str  # "nonzero" or "zero"
    value: Callable[[Params], Rational]

    def satisfied(self, params: Params) -> bool:
        v = self.value(params)
        return v != 0 if self.kind == "nonzero" else v == 0


@dataclass(frozen=True)
class FamilySpec:
    id: str
    description: str
    param_names: tuple[str, ...]
    defaults: tuple[tuple[str, Rational], ...]
    constraints: tuple[Constraint, ...]
    builder: Callable[[Params], tuple[Algebra, SkewForm]]
    claims: tuple[str, ...]
    sampler: Callable[[random.Random], Params] | None = None
    extra_checks: Callable[[Params], list[Check]] | None = None

    def default_params(self) -> Params:
        return dict(self.defaults)

    def sample(self, rng: random.Random) -> Params:
        if self.sampler is not None:
            return self.sampler(rng)
        return _generic_sample(self, rng)


@dataclass(frozen=True)
class SampleOutcome:
    index: int
    params: tuple[tuple[str, Rational], ...]
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass(frozen=True)
class VerificationRun:
    family_id: str
    seed: int
    samples: int
    outcomes: tuple[SampleOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def failures(self) -> list[SampleOutcome]:
        return [o for o in self.outcomes if not o.ok]


def _generic_sample(spec: FamilySpec, rng: random.Random,
                    attempts: int = 400) -> Params:
    for _ in range(attempts):
        params: Params = {name: Fraction(rng.randint(-6, 6))
                          for name in spec.param_names}
        if all(c.satisfied(params) for c in spec.constraints):
            return params
    raise RuntimeError(f"could not sample parameters for {spec.id}")


def _nonzero(name: str) -> Constraint:
    return Constraint(f"{name}-nonzero", "nonzero", lambda p, n=name: p[n])


# ---------------------------------------------------------------------------
# shared bases


def _abelian2_base() -> SymplecticLie:
    g = Algebra.from_table(2, {}, labels=("e1", "e2"))
    return SymplecticLie(g, form_from_pairs(2, {(1, 2): 1}))


def _rr3_base() -> SymplecticLie:
    g = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (1, 3): {3: -1}, (3, 1): {3: 1},
    }, labels=("e1", "e2", "e3", "e4"))
    return SymplecticLie(g, form_from_pairs(4, {(1, 4): 1, (2, 3): 1}))


# ---------------------------------------------------------------------------
# builders

E4 = ("e1", "e2", "e3", "e4")
W_14_23 = {(1, 4): 1, (2, 3): 1}
W_12_34 = {(1, 2): 1, (3, 4): 1}
W_13_24 = {(1, 3): 1, (2, 4): 1}


def _dim2_nonlie(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(2, {(2, 2): {1: p["x"]}}, labels=("e1", "e2"))
    return a, form_from_pairs(2, {(1, 2): 1})


def _r4_left(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 1): {4: 1}, (1, 2): {3: 1}, (1, 3): {4: 1},
        (2, 1): {3: -1}, (3, 1): {4: -1},
    }, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _lie_rr3m1(p: Params) -> tuple[Algebra, SkewForm]:
    gs = _rr3_base()
    return gs.g, gs.form


def _bs4_a(p: Params) -> tuple[Algebra, SkewForm]:
    x, y, z, t = p["x"], p["y"], p["z"], p["t"]
    a = Algebra.from_table(4, {
        (1, 1): {3: x, 4: y},
        (1, 2): {3: y, 4: z}, (2, 1): {3: y, 4: z},
        (2, 2): {3: z, 4: t},
    }, labels=E4)
    return a, form_from_pairs(4, W_13_24)


def _bs4_b(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {(1, 1): {4: p["x"]}}, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _bs4_c(p: Params) -> tuple[Algebra, SkewForm]:
    x, y, z, t = p["x"], p["y"], p["z"], p["t"]
    a = Algebra.from_table(4, {
        (1, 2): {3: 1 + z, 4: y}, (2, 1): {3: z - 1, 4: y},
        (1, 1): {3: y, 4: x},
        (2, 2): {3: t, 4: z},
    }, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _bs4_d(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 2): {3: 1}, (2, 1): {3: -1}, (2, 2): {3: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _bs4_e(p: Params) -> tuple[Algebra, SkewForm]:
    x, a = p["x"], p["a"]
    alg = Algebra.from_table(4, {
        (1, 2): {3: 1 + x / a, 4: x}, (2, 1): {3: x / a - 1, 4: x},
        (1, 1): {3: x, 4: a * x},
        (2, 2): {3: x / (a * a), 4: x / a},
    }, labels=E4)
    return alg, form_from_pairs(4, W_14_23)


def _bs4_f(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 2): {3: 1}, (2, 1): {3: -1}, (1, 1): {4: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _bs4_g(p: Params) -> tuple[Algebra, SkewForm]:
    x, a = p["x"], p["a"]
    alg = Algebra.from_table(4, {
        (1, 2): {3: 1 + x, 4: x / a}, (2, 1): {3: x - 1, 4: x / a},
        (1, 1): {3: x / a, 4: x / (a * a)},
        (2, 2): {3: a * x, 4: x},
    }, labels=E4)
    return alg, form_from_pairs(4, W_14_23)


def _bs4_h(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1}, (4, 4): {3: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_12_34)


def _bs4_i(p: Params) -> tuple[Algebra, SkewForm]:
    x, a = p["x"], p["a"]
    alg = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (3, 3): {3: x, 4: -a * x},
        (3, 4): {3: x / a, 4: -x}, (4, 3): {3: x / a, 4: -x},
        (4, 4): {3: x / (a * a), 4: -x / a},
    }, labels=E4)
    return alg, form_from_pairs(4, W_12_34)


def _bs4_j(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1}, (3, 3): {4: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_12_34)


def _bs4_k(p: Params) -> tuple[Algebra, SkewForm]:
    x, a = p["x"], p["a"]
    alg = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (3, 3): {3: x, 4: -x / a},
        (3, 4): {3: a * x, 4: -x}, (4, 3): {3: a * x, 4: -x},
        (4, 4): {3: a * a * x, 4: -a * x},
    }, labels=E4)
    return alg, form_from_pairs(4, W_12_34)


def _bs4_l(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (1, 3): {3: -1}, (3, 1): {3: 1},
        (1, 1): {4: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_14_23)


def _bs4_m(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (4, 1): {1: 1}, (1, 4): {1: -1},
        (4, 3): {2: 1}, (3, 4): {2: -1},
        (3, 3): {2: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, {(1, 4): 1, (2, 3): p["s"]})


def _bs4_n(p: Params) -> tuple[Algebra, SkewForm]:
    a = Algebra.from_table(4, {
        (4, 1): {2: 1}, (1, 4): {2: -1},
        (4, 2): {3: 1}, (2, 4): {3: -1},
        (4, 4): {3: p["x"]},
    }, labels=E4)
    return a, form_from_pairs(4, W_12_34)


def _core2_nonabelian(p: Params) -> tuple[Algebra, SkewForm]:
    al, be, lam, mu, om = p["alpha"], p["beta"], p["lam"], p["mu"], p["om"]
    a = Algebra.from_table(4, {
        (1, 1): {4: om},
        (1, 2): {2: al, 4: -al * al / lam},
        (2, 1): {2: -al, 4: al * al / lam},
        (1, 3): {2: be, 4: mu},
        (3, 1): {2: -be, 4: -mu},
        (2, 3): {2: lam, 4: -al},
        (3, 2): {2: -lam, 4: al},
    }, labels=("H", "e", "f", "estar"))
    return a, form_from_pairs(4, {(1, 4): -1, (2, 3): 1})


def _abel2_case1_data(p: Params) -> ExtensionData:
    al, be, psi1, xi1 = p["alpha"], p["beta"], p["psi1"], p["xi1"]
    S = Matrix.from_rows([[0, al], [0, 0]])
    F = Matrix.from_rows([[0, be], [0, 0]])
    half = Fraction(1, 2)
    return ExtensionData(1, [F], [S - F],
                         [[[half * (psi1 + xi1), 0]]],
                         [[[psi1, 0]]], [[[xi1, 0]]], [[[p["om"]]]])


def _abel2_case2_data(p: Params) -> ExtensionData:
    A = Matrix.from_rows([[p["a11"], p["a12"]], [p["a21"], -p["a11"]]])
    F = A.scale(p["alpha"])
    c = [p["c1"], p["c2"]]
    return ExtensionData(1, [F], [F.scale(-1)],
                         [[[0, 0]]], [[c]], [[[-x for x in c]]], [[[p["om"]]]])


def _abel2_case1(p: Params) -> tuple[Algebra, SkewForm]:
    return build_double_extension(_abelian2_base(), _abel2_case1_data(p))


def _abel2_case2(p: Params) -> tuple[Algebra, SkewForm]:
    return build_double_extension(_abelian2_base(), _abel2_case2_data(p))


def _rr3_solution(p: Params) -> tuple[Matrix, Matrix, tuple, tuple, Rational]:
    b1, b2, b3, b = p["b1"], p["b2"], p["b3"], p["b"]
    F = Matrix.from_rows([
        [0, 0, 0, 0],
        [b1, -b, 0, 0],
        [b2, 0, b, 0],
        [b3, 0, 0, 0],
    ])
    S = Matrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0],
                          [p["s"], 0, 0, 0]])
    a0 = (p["z"], b1 * b, b2 * b, p["y"])
    c0 = (0, 0, 0, p["x"])
    b0 = tuple(2 * c - a for c, a in zip(c0, a0))
    return F, S, a0, b0, p["lam"]


def _rr3_sixdim_raw(p: Params) -> tuple[Algebra, SkewForm]:
    b1, b2, b3, b = p["b1"], p["b2"], p["b3"], p["b"]
    s, x, y, z, lam = p["s"], p["x"], p["y"], p["z"], p["lam"]
    half = Fraction(1, 2)
    a = Algebra.from_table(6, {
        (5, 1): {2: b1, 3: b2, 4: b3, 6: -y},
        (5, 2): {2: -b, 6: -b2 * b},
        (5, 3): {3: b, 6: b1 * b},
        (1, 5): {2: -b1, 3: -b2, 4: s - b3, 6: y - 2 * x},
        (2, 5): {2: b, 6: b2 * b},
        (3, 5): {3: -b, 6: -b1 * b},
        (5, 4): {6: z}, (4, 5): {6: -z},
        (1, 2): {2: 1, 6: b2}, (2, 1): {2: -1, 6: -b2},
        (1, 3): {3: -1, 6: -b1}, (3, 1): {3: 1, 6: b1},
        (1, 1): {6: -half * s},
        (5, 5): {4: x, 6: lam},
    }, labels=("e1", "e2", "e3", "e4", "e5", "e6"))
    return a, form_from_pairs(6, {(1, 4): 1, (2, 3): 1, (5, 6): -1})


def _rr3_sixdim_b0(p: Params) -> tuple[Algebra, SkewForm]:
    b1, b2, b3 = p["b1"], p["b2"], p["b3"]
    s, x, y, z, lam = p["s"], p["x"], p["y"], p["z"], p["lam"]
    half = Fraction(1, 2)
    yy = y + 2 * b2 * b1
    a = Algebra.from_table(6, {
        (5, 1): {4: b3, 6: -yy},
        (1, 5): {4: s - b3, 6: yy - 2 * x},
        (5, 4): {6: z}, (4, 5): {6: -z},
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (1, 3): {3: -1}, (3, 1): {3: 1},
        (1, 1): {6: -half * s},
        (5, 5): {4: x, 6: lam},
    }, labels=("e1", "e2", "e3", "e4", "e5", "e6"))
    return a, form_from_pairs(6, {(1, 4): 1, (2, 3): 1, (5, 6): -1})


def _rr3_sixdim_bne0(p: Params) -> tuple[Algebra, SkewForm]:
    b1, b2, b3 = p["b1"], p["b2"], p["b3"]
    s, x, y, z, lam = p["s"], p["x"], p["y"], p["z"], p["lam"]
    half = Fraction(1, 2)
    yy = y + 2 * b2 * b1
    a = Algebra.from_table(6, {
        (5, 1): {4: b3, 6: -yy},
        (5, 2): {2: -1}, (2, 5): {2: 1},
        (5, 3): {3: 1}, (3, 5): {3: -1},
        (1, 5): {4: s - b3, 6: yy - 2 * x},
        (5, 4): {6: z}, (4, 5): {6: -z},
        (1, 2): {2: 1}, (2, 1): {2: -1},
        (1, 3): {3: -1}, (3, 1): {3: 1},
        (1, 1): {6: -half * s},
        (5, 5): {4: x, 6: lam},
    }, labels=("e1", "e2", "e3", "e4", "e5", "e6"))
    return a, form_from_pairs(6, {
        (1, 2): b2, (1, 3): b1, (1, 4): 1, (2, 3): 1,
        (5, 6): -1, (2, 5): b2, (3, 5): b1,
    })


# ---------------------------------------------------------------------------
# samplers and extra verification routes


def _rr3_sampler(names: tuple[str, ...]):
    def draw(rng: random.Random) -> Params:
        params: Params = {n: Fraction(rng.randint(-6, 6)) for n in names}
        if rng.choice((True, False)):
            params["z"] = Fraction(0)
        else:
            params["x"] = Fraction(0)
            params["s"] = Fraction(0)
        return params
    return draw


def _bs4_m_sampler(rng: random.Random) -> Params:
    x = Fraction(0)
    while x == 0:
        x = Fraction(rng.randint(-6, 6))
    return {"x": x, "s": Fraction(rng.choice((1, -1)))}


def _abel2_checks(case_data) -> Callable[[Params], list[Check]]:
    def run(params: Params) -> list[Check]:
        gs = _abelian2_base()
        rep = check_reduced_system(gs, case_data(params))
        bad = ", ".join(c.name for c in rep.failed())
        return [Check("reduced-system", rep.ok, bad and f"failed: {bad}")]
    return run


def _rr3_raw_checks(params: Params) -> list[Check]:
    gs = _rr3_base()
    F, S, a0, b0, lam = _rr3_solution(params)
    rep = check_rank_one(gs, F, S, a0, b0, lam)
    checks = [Check("rank-one-system", rep.ok,
                    "" if rep.ok else "failed: " + ", ".join(
                        c.name for c in rep.failed()))]
    if rep.ok:
        built, built_form = build_rank_one(gs, F, S, a0, b0, lam)
        table, table_form = _rr3_sixdim_raw(params)
        checks.append(Check("construction-matches-display",
                            built.c == table.c))
        checks.append(Check("form-matches-display",
                            built_form.w == table_form.w))
    return checks


# ---------------------------------------------------------------------------
# the registry

BISYM = ("symmetric-leibniz", "bi-symplectic", "non-lie")


def _family(fid, description, params, defaults, constraints, builder, claims,
            sampler=None, extra=None) -> FamilySpec:
    return FamilySpec(fid, description, tuple(params),
                      tuple((k, rat(v)) for k, v in defaults.items()),
                      tuple(constraints), builder, tuple(claims),
                      sampler, extra)


_FAMILIES: tuple[FamilySpec, ...] = (
    _family("DIM2_NONLIE",
            "plane with a single square e2*e2 = x e1",
            ("x",), {"x": 1}, [_nonzero("x")], _dim2_nonlie, BISYM),
    _family("R4_LEFT",
            "four-dimensional left and right Leibniz algebra that is "
            "neither Lie nor left symmetric",
            (), {}, [], _r4_left,
            ("left-leibniz", "right-leibniz", "symmetric-leibniz",
             "left-symplectic", "right-symplectic", "bi-symplectic",
             "non-lie")),
    _family("BS4_A",
            "totally symmetric products into the span of e3, e4",
            ("x", "y", "z", "t"), {"x": 1, "y": 2, "z": 3, "t": 4},
            [], _bs4_a, BISYM + ()),
    _family("BS4_B",
            "one square e1*e1 = x e4",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_b, BISYM),
    _family("BS4_C",
            "skew part e3 between e1 and e2 over a symmetric layer",
            ("x", "y", "z", "t"), {"x": 1, "y": 2, "z": 3, "t": 4},
            [], _bs4_c, BISYM),
    _family("BS4_D",
            "commutator e3 with a single square e2*e2 = x e3",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_d, BISYM),
    _family("BS4_E",
            "commutator e3 with squares scaled by x and a",
            ("x", "a"), {"x": 1, "a": 2},
            [_nonzero("x"), _nonzero("a")], _bs4_e, BISYM),
    _family("BS4_F",
            "commutator e3 with a single square e1*e1 = x e4",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_f, BISYM),
    _family("BS4_G",
            "commutator e3 with squares scaled by x and a, dual weights",
            ("x", "a"), {"x": 1, "a": 2},
            [_nonzero("x"), _nonzero("a")], _bs4_g, BISYM),
    _family("BS4_H",
            "non-abelian plane plus a square e4*e4 = x e3",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_h, BISYM),
    _family("BS4_I",
            "non-abelian plane plus a rank-one symmetric block on e3, e4",
            ("x", "a"), {"x": 1, "a": 2},
            [_nonzero("x"), _nonzero("a")], _bs4_i, BISYM),
    _family("BS4_J",
            "non-abelian plane plus a square e3*e3 = x e4",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_j, BISYM),
    _family("BS4_K",
            "non-abelian plane plus a symmetric block weighted by a",
            ("x", "a"), {"x": 1, "a": 2},
            [_nonzero("x"), _nonzero("a")], _bs4_k, BISYM),
    _family("BS4_L",
            "rr(3,-1) bracket on e1, e2, e3 plus a square e1*e1 = x e4",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_l, BISYM),
    _family("BS4_M",
            "weighted action of e4 with a square e3*e3 = x e2; the form "
            "carries a sign s",
            ("x", "s"), {"x": 1, "s": 1},
            [_nonzero("x"),
             Constraint("sign-square-one", "zero",
                        lambda p: p["s"] * p["s"] - 1)],
            _bs4_m, BISYM, sampler=_bs4_m_sampler),
    _family("BS4_N",
            "nilpotent action of e4 with a square e4*e4 = x e3",
            ("x",), {"x": 1}, [_nonzero("x")], _bs4_n, BISYM),
    _family("LIE_RR3M1",
            "the solvable Lie algebra rr(3,-1) with its flat form",
            (), {}, [], _lie_rr3m1,
            ("lie", "left-symplectic", "right-symplectic", "bi-symplectic")),
    _family("CORE2_NONABELIAN",
            "one-dimensional extension over the non-abelian plane",
            ("alpha", "beta", "lam", "mu", "om"),
            {"alpha": 1, "beta": 2, "lam": 3, "mu": -1, "om": 2},
            [_nonzero("lam"), _nonzero("om")], _core2_nonabelian,
            ("left-leibniz", "left-symplectic", "non-lie")),
    _family("ABEL2_CASE1",
            "extension data over the abelian plane with a nonzero "
            "symmetrized action",
            ("alpha", "beta", "psi1", "xi1", "om"),
            {"alpha": 2, "beta": -1, "psi1": 3, "xi1": 5, "om": 7},
            [_nonzero("alpha")], _abel2_case1,
            ("left-leibniz", "left-symplectic", "non-lie"),
            extra=_abel2_checks(_abel2_case1_data)),
    _family("ABEL2_CASE2",
            "extension data over the abelian plane driven by a traceless "
            "invertible operator",
            ("alpha", "a11", "a12", "a21", "c1", "c2", "om"),
            {"alpha": 3, "a11": 1, "a12": 2, "a21": 1,
             "c1": 4, "c2": -5, "om": 2},
            [_nonzero("alpha"),
             Constraint("det-A-nonzero", "nonzero",
                        lambda p: p["a11"] * p["a11"] + p["a12"] * p["a21"])],
            _abel2_case2,
            ("left-leibniz", "left-symplectic"),
            extra=_abel2_checks(_abel2_case2_data)),
    _family("RR3_SIXDIM_RAW",
            "six-dimensional extension of rr(3,-1), as first derived",
            ("b1", "b2", "b3", "b", "s", "x", "y", "z", "lam"),
            {"b1": 2, "b2": -1, "b3": 3, "b": 4, "s": 5, "x": -2,
             "y": 6, "z": 0, "lam": 7},
            [Constraint("zx-zero", "zero", lambda p: p["z"] * p["x"]),
             Constraint("zs-zero", "zero", lambda p: p["z"] * p["s"])],
            _rr3_sixdim_raw,
            ("left-leibniz", "left-symplectic"),
            sampler=_rr3_sampler(("b1", "b2", "b3", "b", "s", "x", "y",
                                  "z", "lam")),
            extra=_rr3_raw_checks),
    _family("RR3_SIXDIM_B0",
            "six-dimensional extension of rr(3,-1), vanishing diagonal "
            "action",
            ("b1", "b2", "b3", "s", "x", "y", "z", "lam"),
            {"b1": 2, "b2": -1, "b3": 3, "s": 5, "x": -2, "y": 6,
             "z": 0, "lam": 7},
            [Constraint("zx-zero", "zero", lambda p: p["z"] * p["x"]),
             Constraint("zs-zero", "zero", lambda p: p["z"] * p["s"])],
            _rr3_sixdim_b0,
            ("left-leibniz", "left-symplectic"),
            sampler=_rr3_sampler(("b1", "b2", "b3", "s", "x", "y", "z",
                                  "lam"))),
    _family("RR3_SIXDIM_BNE0",
            "six-dimensional extension of rr(3,-1), diagonal action "
            "normalized to one",
            ("b1", "b2", "b3", "s", "x", "y", "z", "lam"),
            {"b1": 2, "b2": -1, "b3": 3, "s": 5, "x": -2, "y": 6,
             "z": 0, "lam": 7},
            [Constraint("zx-zero", "zero", lambda p: p["z"] * p["x"]),
             Constraint("zs-zero", "zero", lambda p: p["z"] * p["s"])],
            _rr3_sixdim_bne0,
            ("left-leibniz", "left-symplectic"),
            sampler=_rr3_sampler(("b1", "b2", "b3", "s", "x", "y", "z",
                                  "lam"))),
)

_BY_ID = {spec.id: spec for spec in _FAMILIES}


def list_families() -> tuple[str, ...]:
    return tuple(spec.id for spec in _FAMILIES)


def get(family_id: str) -> FamilySpec:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise ValueError(f"unknown family: {family_id}") from None


def resolve_params(family_id: str, params: Mapping[str, object] | None = None
                   ) -> Params:
    """Merge user parameters over the family defaults and check constraints."""
    spec = get(family_id)
    merged = spec.default_params()
    for key, value in (params or {}).items():
        if key not in spec.param_names:
            raise ValueError(f"unknown parameter for {family_id}: {key}")
        merged[key] = rat(value)
    for c in spec.constraints:
        if not c.satisfied(merged):
            raise ValueError(f"constraint violated: {c.name}")
    return merged


def instantiate(family_id: str, params: Mapping[str, object] | None = None
                ) -> tuple[Algebra, SkewForm]:
    spec = get(family_id)
    return spec.builder(resolve_params(family_id, params))


_PREDICATES = {
    "left-leibniz": lambda a, w: is_left_leibniz(a),
    "right-leibniz": lambda a, w: is_right_leibniz(a),
    "symmetric-leibniz": lambda a, w: is_symmetric_leibniz(a),
    "left-symplectic": is_symplectic_left,
    "right-symplectic": is_symplectic_right,
    "bi-symplectic": is_bi_symplectic,
    "lie": lambda a, w: is_lie(a),
}


def _claim_check(claim: str, algebra: Algebra, form: SkewForm) -> Check:
    if claim == "non-lie":
        rep = is_lie(algebra)
        return Check("non-lie", not rep.holds,
                     "" if not rep.holds else "the product is a Lie bracket")
    rep = _PREDICATES[claim](algebra, form)
    return Check(claim, rep.holds, "" if rep.holds else str(rep.witness))


def verify(family_id: str, params: Mapping[str, object] | None = None
           ) -> SystemReport:
    spec = get(family_id)
    resolved = resolve_params(family_id, params)
    checks: list[Check] = []
    if spec.extra_checks is not None:
        checks.extend(spec.extra_checks(resolved))
    algebra, form = spec.builder(resolved)
    checks.extend(_claim_check(c, algebra, form) for c in spec.claims)
    return SystemReport(family_id, tuple(checks))


def sample_verify(family_id: str, seed: int = 0, count: int = 20
                  ) -> VerificationRun:
    spec = get(family_id)
    rng = random.Random(seed)
    outcomes = []
    for index in range(count):
        params = spec.sample(rng)
        report = verify(family_id, params)
        outcomes.append(SampleOutcome(index, tuple(sorted(params.items())),
                                      report.checks))
    return VerificationRun(family_id, seed, count, tuple(outcomes))


def extension_data(family_id: str, params: Mapping[str, object] | None = None
                   ) -> tuple[SymplecticLie, ExtensionData]:
    """The (core, data) pair behind the extension-generator families."""
    makers = {"ABEL2_CASE1": _abel2_case1_data, "ABEL2_CASE2": _abel2_case2_data}
    if family_id not in makers:
        raise ValueError(f"{family_id} does not carry extension data")
    resolved = resolve_params(family_id, params)
    return _abelian2_base(), makers[family_id](resolved)


def rank_one_data(params: Mapping[str, object] | None = None
                  ) -> tuple[SymplecticLie, Matrix, Matrix, tuple, tuple, Rational]:
    """The solved one-dimensional extension data over rr(3,-1)."""
    resolved = resolve_params("RR3_SIXDIM_RAW", params)
    return (_rr3_base(),) + _rr3_solution(resolved)
