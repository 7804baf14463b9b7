"""Lazy, cached construction of every object the checks and the CLI need, plus the
full verification run."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import fixtures
from .entangle import (coset_j_matrices, compare_opposite_tables, equal_bases,
                       is_plain_integer, joint_distribution, opposite_map, partner_basis_map,
                       sign_canonical)
from .exactnum import D_SV, H, J, J1, J2, CVec4
from .matgroup import (image_group, perm_is_even, perm_str, projective_order, sigma_tilde,
                       two_a4, two_a5, two_s5)
from .orthograph import (bases_via_group, build, enumerate_bases, ks_colorability,
                         nonorth_clique_census)
from .rayconfig import (align_with_table, gram_spectrum, orbit_configuration,
                        sv_pure_imaginary, type_counts, witting_configuration,
                        witting_pure_imaginary)
from .realify import e8_verify, realify, realify_vector, t_gram, witting_to_sv

J_MATRICES = {"J": J, "J1": J1, "J2": J2}

SV_CENSUS = {10: 3528, 11: 15120, 12: 277130, 13: 1117200, 14: 3802620, 15: 7018440,
             16: 12077100, 17: 3619560, 18: 2737980, 19: 446040, 20: 342636, 21: 1120,
             22: 16860, 24: 420}


class Workspace:
    """Everything derived from the generators and the fixture tables, built on demand."""

    def __init__(self, fixture_dir=None):
        self.fixture_dir = fixture_dir

    # fixtures
    @cached_property
    def table_states(self):
        return fixtures.load_states(self.fixture_dir)

    @cached_property
    def table_types(self):
        return fixtures.load_types(self.fixture_dir)

    @cached_property
    def table_bases(self):
        return fixtures.load_bases(self.fixture_dir)

    def table_opposites(self, which: str):
        return fixtures.load_opposites(which, self.fixture_dir)

    @cached_property
    def table_basis_pairs(self):
        return fixtures.load_basis_pairs(self.fixture_dir)

    # groups
    @cached_property
    def group(self):
        return sigma_tilde()

    # configurations
    @cached_property
    def sv(self):
        raw = orbit_configuration(self.group, CVec4.basis(D_SV, 0))
        return align_with_table(raw, self.table_states)

    @cached_property
    def witting(self):
        return witting_configuration()

    def config(self, name: str):
        return {"sv": self.sv, "witting": self.witting}[name]

    @cached_property
    def sv_graph(self):
        return build(self.sv)

    @cached_property
    def witting_graph(self):
        return build(self.witting)

    def graph(self, name: str):
        return {"sv": self.sv_graph, "witting": self.witting_graph}[name]

    @cached_property
    def sv_bases(self):
        return enumerate_bases(self.sv_graph)

    @cached_property
    def witting_bases(self):
        return enumerate_bases(self.witting_graph)

    def bases(self, name: str):
        return {"sv": self.sv_bases, "witting": self.witting_bases}[name]

    def opposites(self, which: str):
        return opposite_map(J_MATRICES[which], self.sv)

    @cached_property
    def basis_pairing(self):
        return partner_basis_map(J, self.sv_bases, self.sv)

    @cached_property
    def coset_matrices(self):
        return coset_j_matrices(self.group, two_s5(), J)


# --------------------------------------------------------------------------
# verification report
# --------------------------------------------------------------------------

PASS, FAIL, FLAGGED = "pass", "fail", "mismatch-flagged"


@dataclass
class Check:
    name: str
    status: str
    expected: str
    computed: str
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def ok(self, strict: bool = False) -> bool:
        allowed = {PASS} if strict else {PASS, FLAGGED}
        return all(c.status in allowed for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        rows = []
        for c in self.checks:
            row = {"name": c.name, "status": c.status, "expected": c.expected,
                   "computed": c.computed}
            if timings:
                row["elapsed_s"] = round(c.elapsed, 3)
            rows.append(row)
        return {"checks": rows, "passed": self.ok()}


def _fmt(x) -> str:
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(_fmt(v) for v in sorted(x)) + "}"
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in sorted(x.items())) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in x) + "]"
    return str(x)


def _check(report: VerificationReport, name: str, fn):
    t0 = time.perf_counter()
    try:
        status, expected, computed = fn()
    except Exception as exc:  # a crashing check is a failed check
        status, expected, computed = FAIL, "no error", f"{type(exc).__name__}: {exc}"
    report.checks.append(Check(name, status, _fmt(expected), _fmt(computed),
                               time.perf_counter() - t0))


def _eq(expected, computed):
    return (PASS if expected == computed else FAIL), expected, computed


def run_checks(ws: Workspace, threads: int = 1, census_threads_alt: int = 8) -> VerificationReport:
    """Every acceptance criterion, in order."""
    rep = VerificationReport()
    g = ws.group

    def groups():
        orders = {"<P1,P2>": len(two_a4()), "<P1,P2,S>": len(g),
                  "projective": projective_order(g), "<J,H>": len(two_a5()),
                  "<J,H,P2>": len(two_s5())}
        return _eq({"<P1,P2>": 24, "<P1,P2,S>": 5040, "projective": 2520, "<J,H>": 120,
                    "<J,H,P2>": 240}, orders)
    _check(rep, "1 group orders", groups)

    def homomorphism():
        img = image_group(g)
        got = {"image order": len(img), "all even": all(perm_is_even(p) for p in img),
               "H7(J)": perm_str(g.perm_of(J)), "H7(H)": perm_str(g.perm_of(H))}
        return _eq({"image order": 2520, "all even": True, "H7(J)": "(1,6)(2,5)",
                    "H7(H)": "(1,6,5,2,7)"}, got)
    _check(rep, "2 homomorphism onto A7", homomorphism)

    def configuration():
        cfg = ws.sv
        got = {"vectors": cfg.vector_count, "rays": len(cfg), "types": type_counts(cfg),
               "spectrum": {str(x) for x in gram_spectrum(cfg)},
               "table rows matched": len(cfg.table_index)}
        return _eq({"vectors": 240, "rays": 120, "types": {1: 4, 2: 12, 3: 32, 4: 72},
                    "spectrum": {"0", "1/7", "2/7", "4/7"}, "table rows matched": 120}, got)
    _check(rep, "3 configuration", configuration)

    def bases():
        cfg, B = ws.sv, ws.sv_bases
        per_ray = {}
        for b in B:
            for i in b.members:
                per_ray[i] = per_ray.get(i, 0) + 1
        via, fibres = bases_via_group(g, cfg)
        table, _ = ws.table_bases
        got = {"bases": len(B), "per ray": set(per_ray.values()),
               "degrees": set(ws.sv_graph.degrees()), "group oracle equal": via == B,
               "fibres": set(fibres.values()),
               "table matches": sum(1 for b, t in zip(B, table) if b.labels == t)}
        return _eq({"bases": 210, "per ray": {7}, "degrees": {21}, "group oracle equal": True,
                    "fibres": {24}, "table matches": 210}, got)
    _check(rep, "4 bases", bases)

    census_cache = {}

    def census():
        c = nonorth_clique_census(ws.sv_graph, threads=threads)
        census_cache[threads] = c.histogram
        got = {"histogram": c.histogram, "total": c.total}
        return _eq({"histogram": SV_CENSUS, "total": 31475754}, got)
    _check(rep, "5 clique census", census)

    def witting():
        cfg, gr, B = ws.witting, ws.witting_graph, ws.witting_bases
        c = nonorth_clique_census(gr)
        per_ray = {}
        for b in B:
            for i in b.members:
                per_ray[i] = per_ray.get(i, 0) + 1
        got = {"rays": len(cfg), "vectors": cfg.vector_count, "degrees": set(gr.degrees()),
               "bases": len(B), "per ray": set(per_ray.values()),
               "spectrum": {str(x) for x in gram_spectrum(cfg)},
               "cliques": c.total, "min": c.min_size, "max": c.max_size}
        return _eq({"rays": 40, "vectors": 240, "degrees": {12}, "bases": 40, "per ray": {4},
                    "spectrum": {"0", "1/3"}, "cliques": 2970, "min": 4, "max": 7}, got)
    _check(rep, "6 Witting mirror", witting)

    def ks():
        got = {name: ("SAT" if ks_colorability(ws.graph(name), ws.bases(name)).satisfiable
                      else "UNSAT") for name in ("sv", "witting")}
        return _eq({"sv": "UNSAT", "witting": "UNSAT"}, got)
    _check(rep, "7 Kochen-Specker noncolourability", ks)

    def entanglement():
        cfg, B = ws.sv, ws.sv_bases
        opp = ws.opposites("J")
        underlined = ws.table_bases[1]
        pairing = ws.basis_pairing
        eq30 = set(underlined)
        two_pairs = all(
            sum(1 for i in B[k - 1].members if opp.pairs[i] in B[k - 1].members) == 4
            for k in eq30)
        got = {"opposite table matches": sum(1 for i, j in opp.labelled(cfg).items()
                                      if ws.table_opposites("J")[i] == j),
               "basis-pair table matches": sum(1 for k, v in pairing.pairs.items()
                                      if ws.table_basis_pairs[k] == v),
               "fixed = underlined": pairing.fixed_set == sorted(underlined),
               "equal bases 2A5": equal_bases(two_a5(), cfg, B) == eq30,
               "equal bases 2S5": equal_bases(two_s5(), cfg, B) == eq30,
               "two opposite pairs each": two_pairs}
        return _eq({"opposite table matches": 120, "basis-pair table matches": 210, "fixed = underlined": True,
                    "equal bases 2A5": True, "equal bases 2S5": True,
                    "two opposite pairs each": True}, got)
    _check(rep, "8 entanglement pairings", entanglement)

    def tables56():
        computed = {w: ws.opposites(w).labelled(ws.sv) for w in ("J1", "J2")}
        printed = {w: ws.table_opposites(w) for w in ("J1", "J2")}
        cmp = compare_opposite_tables(computed, printed)
        got = {"J1 reproduces table for": cmp["assignment"]["J1"],
               "J2 reproduces table for": cmp["assignment"]["J2"],
               "covers both": cmp["covers_both"]}
        expected_direct = {"J1 reproduces table for": "J1", "J2 reproduces table for": "J2",
                           "covers both": True}
        if got == expected_direct:
            return PASS, expected_direct, got
        if cmp["covers_both"] and cmp["swapped"]:
            return FLAGGED, expected_direct, {**got, "note": "printed tables swapped"}
        return FAIL, expected_direct, got
    _check(rep, "9 J1/J2 opposite tables", tables56)

    def coset_check():
        cm = ws.coset_matrices
        plain = [M for _, M in cm[1:] if is_plain_integer(M)]
        got = {"cosets": len(cm), "first is J": cm[0][1] == sign_canonical(J),
               "plain {0,+-1} besides J": len(plain),
               "plain equal J1, J2": sorted(M.key() for M in plain)
               == sorted((sign_canonical(J1).key(), sign_canonical(J2).key())),
               "antisymmetric unitary": all(M.is_antisymmetric() and M.is_unitary()
                                            for _, M in cm)}
        return _eq({"cosets": 21, "first is J": True, "plain {0,+-1} besides J": 2,
                    "plain equal J1, J2": True, "antisymmetric unitary": True}, got)
    _check(rep, "10 coset matrices", coset_check)

    def e8():
        got = {}
        for name in ("sv", "witting"):
            r = e8_verify(realify(ws.config(name)), strict=False)
            got[name] = {"passed": r.passed,
                         "counts": (r.neighbour_counts.get(1), r.neighbour_counts.get(0),
                                    r.neighbour_counts.get(-1)),
                         "antipode": r.neighbour_counts.get(-2), "reflection": r.reflection_closed,
                         "rank": r.rank}
        exp = {"passed": True, "counts": (56, 126, 56), "antipode": 1, "reflection": True,
               "rank": 8}
        return _eq({"sv": exp, "witting": exp}, got)
    _check(rep, "11 E8 root systems", e8)

    def transform():
        src = realify(ws.witting)
        imgs = [b for _, b in witting_to_sv(src)]
        target = set(realify(ws.sv))
        quad_src = [realify_vector(v) for v in witting_pure_imaginary()]
        quad_img = {b for _, b in witting_to_sv(quad_src)}
        # equal as rays: one image comes out with the opposite overall sign
        quad_ok = ({frozenset((x, -x)) for x in quad_img}
                   == {frozenset((realify_vector(v), -realify_vector(v)))
                       for v in sv_pure_imaginary()})
        got = {"bijective onto": len(set(imgs)) == 240 and set(imgs) == target,
               "M^T M": "21 I" if t_gram() == [[21 * (i == j) for j in range(4)]
                                             for i in range(4)] else str(t_gram()),
               "pure-imaginary quadruple": quad_ok}
        return _eq({"bijective onto": True, "M^T M": "21 I", "pure-imaginary quadruple": True},
                   got)
    _check(rep, "12 T-transform", transform)

    def joint():
        cfg, B = ws.sv, ws.sv_bases
        opp = ws.opposites("J").pairs
        good = 0
        for k, b in enumerate(B, start=1):
            partner = B[ws.basis_pairing.pairs[k] - 1]
            P = joint_distribution(J, b, partner, cfg)
            cells = [(r, s) for r in range(4) for s in range(4) if P[r][s]]
            if (len(cells) == 4 and all(P[r][s] == Fraction(1, 4) for r, s in cells)
                    and all(opp[b.members[r]] == partner.members[s] for r, s in cells)):
                good += 1
        return _eq({"bases with 4 cells of 1/4 at opposite pairs": 210},
                   {"bases with 4 cells of 1/4 at opposite pairs": good})
    _check(rep, "13 joint distributions", joint)

    def determinism():
        base = census_cache.get(threads) or nonorth_clique_census(ws.sv_graph, threads=1).histogram
        alt_threads = census_threads_alt if threads == 1 else 1
        alt = nonorth_clique_census(ws.sv_graph, threads=alt_threads).histogram
        return _eq({"census equal across thread counts": True},
                   {"census equal across thread counts": base == alt})
    _check(rep, "14 determinism", determinism)
    return rep
