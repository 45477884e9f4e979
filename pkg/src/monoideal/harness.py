"""Seeded corpora and executable checks of the index-of-reducibility results.

Each ``verify_*`` function returns a :class:`VerificationReport`.  A failing
report carries a witness (variables plus ideal text, or exponents for the
parameter-ideal check) that :func:`replay` feeds straight back into the same
verifier.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from .asymptotics import (
    NotStabilized,
    ResourceCapExceeded,
    ir_polynomial,
    power,
    symbolic_ir_polynomial,
)
from .core import IdealError, MonomialIdeal, VariableSet, contains, intersect, minimalize, parse_ideal
from .decomposition import (
    IrreducibleComponent,
    PrimaryComponent,
    PrimeSupport,
    associated_primes,
    canonical_component,
    canonical_primary_decomposition,
    embedded_primes,
    ir_at_prime,
    ir_components,
    irreducible_decomposition,
    is_irredundant_primary_decomposition,
    is_maximal_embedded_component,
    mix_in,
)
from .socle import ir, ir_socle, socle_dimension_at

STATEMENTS = ("lemma-2.3", "thm-3.2-suff", "thm-3.2-nec", "cor-3.4-i",
              "thm-4.1", "prop-symbolic", "cor-5.3")

PERTURB_BUDGET = 500


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    arity: int
    n_gens: int
    max_exp: int
    count: int

    def __post_init__(self):
        if self.arity < 1 or self.n_gens < 1 or self.max_exp < 1 or self.count < 0:
            raise IdealError(f"degenerate corpus spec {self}")
        if not 0 <= self.seed < 2**64:
            raise IdealError("seed must fit in 64 bits")


@dataclass
class VerificationReport:
    statement: str
    instance: str
    result: str  # pass | fail | skip
    witness: dict | None = None
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"statement": self.statement, "instance": self.instance,
                "result": self.result, "witness": self.witness}


def default_variables(arity: int) -> VariableSet:
    return VariableSet(tuple(f"x{i + 1}" for i in range(arity)))


def random_monomial_ideal(spec: CorpusSpec) -> list[MonomialIdeal]:
    """``spec.count`` proper, nonzero ideals; the same spec always gives the same list."""
    rng = random.Random(spec.seed)
    amb = default_variables(spec.arity)
    out = []
    while len(out) < spec.count:
        gens = [tuple(rng.randint(0, spec.max_exp) for _ in range(spec.arity))
                for _ in range(spec.n_gens)]
        I = minimalize(gens, amb)
        if I.is_unit or I.is_zero:
            continue
        out.append(I)
    return out


def _witness(I: MonomialIdeal, **extra) -> dict:
    return {"vars": list(I.ambient.names), "ideal": str(I), **extra}


def _report(statement, instance, ok, I, **extra) -> VerificationReport:
    if ok:
        return VerificationReport(statement, instance, "pass", None, extra)
    return VerificationReport(statement, instance, "fail", _witness(I, **extra), extra)


def verify_lemma_2_3(I: MonomialIdeal, instance: str = "") -> VerificationReport:
    """ir from the irreducible decomposition equals the socle sum, prime by prime."""
    by_comp = ir_components(I)
    by_socle = ir_socle(I)
    bad = {}
    for p in associated_primes(I):
        a, s = ir_at_prime(I, p), socle_dimension_at(I, p)
        if a != s:
            bad[",".join(p.names(I.ambient))] = [str(a), str(s)]
    ok = by_comp == by_socle and not bad
    extra = {"ir_components": str(by_comp), "ir_socle": str(by_socle)}
    if bad:
        extra["per_prime"] = bad
    return _report("lemma-2.3", instance, ok, I, **extra)


def verify_thm_3_2_sufficiency(I: MonomialIdeal, instance: str = "") -> VerificationReport:
    comps = canonical_primary_decomposition(I).components
    total = sum(ir_components(Q.ideal) for Q in comps)
    target = ir(I)
    ok = total == target and is_irredundant_primary_decomposition(I, comps)
    return _report("thm-3.2-suff", instance, ok, I, sum=str(total), ir=str(target))


def perturb_embedded_component(I: MonomialIdeal, p: PrimeSupport, seed: int = 0,
                               budget: int = PERTURB_BUDGET) -> PrimaryComponent | None:
    """Look for a non-maximal ``p``-primary component of ``I``.

    Candidates are irreducible ``p``-primary ideals ``W`` containing ``I``,
    with exponents up to ``max generator degree + 2``, tried cheapest first
    (ties broken by ``seed``).  The first ``Q' = C_p & W`` strictly inside the
    canonical component ``C_p`` that mixes into the canonical decomposition
    irredundantly is returned; None after ``budget`` candidates.
    """
    if p not in embedded_primes(I):
        raise IdealError(f"{p.names(I.ambient)} is not an embedded prime")
    amb = I.ambient
    canon = canonical_component(I, p)
    own = {c for c in irreducible_decomposition(canon.ideal)}
    top = I.max_degree + 2
    idx = sorted(p.vars)
    rng = random.Random(seed)
    grid = _exponent_grid(len(idx), top)
    rng.shuffle(grid)
    grid.sort(key=sum)
    tried = 0
    for exps in grid:
        if tried >= budget:
            break
        W = IrreducibleComponent.from_map(amb, dict(zip(idx, exps)))
        if W in own:
            continue
        Wi = W.ideal()
        if not all(contains(Wi, g) for g in I.gens):
            continue
        tried += 1
        Qp = intersect(canon.ideal, Wi)
        if Qp == canon.ideal:
            continue
        cand = PrimaryComponent(Qp, p)
        if is_irredundant_primary_decomposition(I, mix_in(I, cand)):
            return cand
    return None


def _exponent_grid(k: int, top: int) -> list[tuple[int, ...]]:
    out = [()]
    for _ in range(k):
        out = [e + (a,) for e in out for a in range(1, top + 1)]
    return out


def verify_thm_3_2_necessity(I: MonomialIdeal, instance: str = "", seed: int = 0) -> VerificationReport:
    """Swap in a non-maximal embedded component; ir of the parts must overshoot."""
    emb = embedded_primes(I)
    if not emb:
        return VerificationReport("thm-3.2-nec", instance, "skip", None, {"reason": "no embedded primes"})
    target = ir(I)
    checked, failures, none_found = [], [], []
    for p in emb:
        Qp = perturb_embedded_component(I, p, seed)
        name = ",".join(p.names(I.ambient))
        if Qp is None:
            none_found.append(name)
            continue
        mixed = mix_in(I, Qp)
        total = sum(ir_components(Q.ideal) for Q in mixed)
        maximal = is_maximal_embedded_component(I, Qp)
        entry = {"prime": name, "component": str(Qp.ideal), "sum": str(total), "ir": str(target)}
        checked.append(entry)
        if not (total > target and not maximal):
            failures.append(entry)
    if not checked:
        return VerificationReport("thm-3.2-nec", instance, "skip", None,
                                  {"reason": "none found", "primes": none_found})
    return _report("thm-3.2-nec", instance, not failures, I,
                   seed=str(seed), checked=failures or checked)


def verify_cor_3_4_i(I: MonomialIdeal, instance: str = "") -> VerificationReport:
    """At each embedded prime: ir_p(I) = ir_p(Q) = socle dimension, Q the canonical component."""
    emb = embedded_primes(I)
    if not emb:
        return VerificationReport("cor-3.4-i", instance, "skip", None, {"reason": "no embedded primes"})
    bad = {}
    for p in emb:
        Q = canonical_component(I, p)
        vals = (ir_at_prime(I, p), ir_at_prime(Q.ideal, p), socle_dimension_at(I, p))
        if len(set(vals)) != 1:
            bad[",".join(p.names(I.ambient))] = [str(v) for v in vals]
    return _report("cor-3.4-i", instance, not bad, I, **({"per_prime": bad} if bad else {}))


def verify_thm_4_1(I: MonomialIdeal, instance: str = "", n_max: int = 6) -> VerificationReport:
    """Fitted ir polynomial degree lies in ``[bight - 1, analytic spread - 1]``.

    When bight equals the analytic spread the degree must hit the bound.
    """
    try:
        rep = ir_polynomial(I, n_max)
    except (NotStabilized, ResourceCapExceeded) as exc:
        return VerificationReport("thm-4.1", instance, "skip", None, {"reason": str(exc)})
    if rep.fitted_ir is None or rep.analytic_spread is None:
        return VerificationReport("thm-4.1", instance, "skip", None, {"reason": "not stabilized"})
    deg, b, ell = rep.fitted_ir.degree, rep.bight, rep.analytic_spread
    ok = rep.bounds_ok and (b != ell or deg == ell - 1)
    return _report("thm-4.1", instance, ok, I, n_max=str(n_max),
                   degree=str(deg), bight=str(b), analytic_spread=str(ell))


def verify_prop_symbolic(I: MonomialIdeal, instance: str = "", n_max: int = 6) -> VerificationReport:
    try:
        rep = symbolic_ir_polynomial(I, n_max)
    except ResourceCapExceeded as exc:
        return VerificationReport("prop-symbolic", instance, "skip", None, {"reason": str(exc)})
    if rep.fitted_ir is None:
        return VerificationReport("prop-symbolic", instance, "skip", None, {"reason": "not stabilized"})
    return _report("prop-symbolic", instance, rep.bounds_ok, I, n_max=str(n_max),
                   degree=str(rep.fitted_ir.degree), bight=str(rep.bight))


def parameter_ideal(exponents: Sequence[int]) -> MonomialIdeal:
    amb = default_variables(len(exponents))
    if any(a < 1 for a in exponents):
        raise IdealError("parameter ideal exponents must be positive")
    return minimalize([amb.variable(i, a) for i, a in enumerate(exponents)], amb)


def verify_cor_5_3(exponents: Sequence[int], n_max: int = 5, instance: str = "") -> VerificationReport:
    """``ir(q^(n+1)) = C(n+d-1, d-1)`` for ``q = <x_i^a_i>`` and ``n = 0..n_max``."""
    q = parameter_ideal(exponents)
    d = len(exponents)
    got = [ir(power(q, n + 1)) for n in range(n_max + 1)]
    want = [comb(n + d - 1, d - 1) for n in range(n_max + 1)]
    ok = got == want
    instance = instance or "parameter:" + ",".join(str(a) for a in exponents)
    if ok:
        return VerificationReport("cor-5.3", instance, "pass", None, {"ir": [str(v) for v in got]})
    return VerificationReport("cor-5.3", instance, "fail",
                              {"exponents": [str(a) for a in exponents], "n_max": str(n_max),
                               "ir": [str(v) for v in got], "expected": [str(v) for v in want]})


IDEAL_VERIFIERS: dict[str, Callable[..., VerificationReport]] = {
    "lemma-2.3": verify_lemma_2_3,
    "thm-3.2-suff": verify_thm_3_2_sufficiency,
    "thm-3.2-nec": verify_thm_3_2_necessity,
    "cor-3.4-i": verify_cor_3_4_i,
    "thm-4.1": verify_thm_4_1,
    "prop-symbolic": verify_prop_symbolic,
}

PARAMETER_EXPONENTS = ((1, 1), (2, 3), (1, 1, 1))


def bundled_examples() -> list[tuple[str, MonomialIdeal]]:
    """The bundled examples, each over just the variables it uses."""
    from .io import load_bundled_corpus

    corpus = load_bundled_corpus()
    out = []
    for name, I in corpus.entries.items():
        used = sorted({i for g in I.gens for i, e in enumerate(g) if e})
        sub = I.ambient.sub(used)
        out.append((name, minimalize([tuple(g[i] for i in used) for g in I.gens], sub)))
    return out


def run_suite(spec: CorpusSpec, statements: Sequence[str] = STATEMENTS,
              verifiers: dict[str, Callable] | None = None,
              n_max: int = 6, hexagon_n_max: int = 7) -> list[VerificationReport]:
    """Run each requested statement over the corpus and the bundled examples.

    Reports are sorted by statement (in :data:`STATEMENTS` order) then instance.
    """
    unknown = set(statements) - set(STATEMENTS)
    if unknown:
        raise IdealError(f"unknown statements: {sorted(unknown)}")
    table = dict(IDEAL_VERIFIERS)
    table["cor-5.3"] = verify_cor_5_3
    if verifiers:
        table.update(verifiers)
    instances = [(f"bundled:{name}", I) for name, I in bundled_examples()]
    width = len(str(max(spec.count - 1, 0)))
    instances += [(f"corpus:{spec.seed}:{k:0{width}d}", I)
                  for k, I in enumerate(random_monomial_ideal(spec))]
    reports = []
    for st in statements:
        fn = table[st]
        if st == "cor-5.3":
            for exps in PARAMETER_EXPONENTS:
                reports.append(fn(exps, 5))
            continue
        for inst, I in instances:
            kwargs = {}
            if st in ("thm-4.1", "prop-symbolic"):
                kwargs["n_max"] = hexagon_n_max if I.ambient.arity >= 6 else n_max
            if st == "thm-3.2-nec":
                kwargs["seed"] = spec.seed
            reports.append(fn(I, inst, **kwargs))
    order = {s: k for k, s in enumerate(STATEMENTS)}
    reports.sort(key=lambda r: (order[r.statement], r.instance))
    return reports


def summarize(reports: Sequence[VerificationReport]) -> dict[str, int]:
    out = {"pass": 0, "fail": 0, "skip": 0}
    for r in reports:
        out[r.result] += 1
    return out


def replay(report: VerificationReport) -> VerificationReport:
    """Re-run the verifier named in a failing report on its witness."""
    w = report.witness
    if w is None:
        raise IdealError("only failing reports carry a witness")
    if report.statement == "cor-5.3":
        return verify_cor_5_3([int(a) for a in w["exponents"]], int(w["n_max"]), report.instance)
    amb = VariableSet(tuple(w["vars"]))
    I = parse_ideal(w["ideal"], amb)
    kwargs = {}
    if "n_max" in w:
        kwargs["n_max"] = int(w["n_max"])
    if "seed" in w:
        kwargs["seed"] = int(w["seed"])
    return IDEAL_VERIFIERS[report.statement](I, report.instance, **kwargs)
