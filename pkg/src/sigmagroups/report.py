"""Per-(group, sigma) analysis reports and the verification campaign."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .catalog import CATALOG, SIGMA_SPECS, parse_sigma_spec
from .group import (FiniteGroup, Subgroup, _product_mask, image, permutes, quotient)
from .lattice import all_subgroups, frattini, normal_subgroups
from .psigmat import (PsigmaTVerdict, is_psigmat_bruteforce, is_psigmat_subnormal_criterion,
                      is_s_permutable, is_sigma_quasinormal, is_sigma_subnormal,
                      is_special_psigmat, normal_sigma_hall_subgroups, replay_witness,
                      special_psigmat_certificate, theoremA_premises, theoremB_premises,
                      theoremC_criterion)
from .residuals import (O_lower, O_upper, induces_power_automorphisms,
                        induces_power_automorphisms_by_subgroups, is_hall_subgroup,
                        nilpotent_residual, sigma_nilpotent_residual)
from .sigma import (SigmaPartition, complete_hall_sigma_sets, hall_block_subgroups,
                    is_sigma_full_sylow_type, is_sigma_nilpotent, is_sigma_primary,
                    is_sigma_soluble, sigma_of)

SCHEMA_VERSION = 1


def sub_json(S: Subgroup) -> dict:
    return {"order": S.order, "members": [S.parent.labels[m] for m in S.members]}


def _witness_json(v: PsigmaTVerdict):
    if v.witness is None:
        return None
    if v.route == "bruteforce":
        K, H = v.witness
        return {"K": sub_json(K), "H": sub_json(H)}
    A, chain = v.witness
    return {"A": sub_json(A), "chain": [sub_json(C) for C in chain]}


def analyze(G: FiniteGroup, sigma: SigmaPartition, key: str | None = None) -> dict:
    """Full analysis of one (group, sigma) pair as a JSON-ready dict."""
    bf = is_psigmat_bruteforce(G, sigma)
    sn = is_psigmat_subnormal_criterion(G, sigma)
    D = sigma_nilpotent_residual(G, sigma)
    cert = special_psigmat_certificate(G, sigma)
    thm_c = theoremC_criterion(G, sigma)
    sweep = []
    for N in normal_sigma_hall_subgroups(G, sigma):
        sweep.append({"D": sub_json(N),
                      "theorem_A_premises": theoremA_premises(G, sigma, N),
                      "theorem_B_premises": theoremB_premises(G, sigma, N)})
    report = {
        "schema_version": SCHEMA_VERSION,
        "group": {"key": key or G.name, "order": G.order},
        "sigma": str(sigma),
        "sigma_of_G": [sigma.block_label(i) for i in sorted(sigma_of(G.order, sigma))],
        "classifiers": {
            "sigma_primary": is_sigma_primary(G, sigma),
            "sigma_nilpotent": is_sigma_nilpotent(G, sigma),
            "sigma_soluble": is_sigma_soluble(G, sigma),
            "sigma_full_sylow_type": is_sigma_full_sylow_type(G, sigma),
        },
        "residual": sub_json(D),
        "hall_set_count": len(complete_hall_sigma_sets(G, sigma)),
        "psigmat": {
            "bruteforce": {"value": bf.value, "witness": _witness_json(bf),
                           "witness_replays": replay_witness(bf, G, sigma)},
            "subnormal": {"value": sn.value, "witness": _witness_json(sn),
                          "witness_replays": replay_witness(sn, G, sigma)},
        },
        "special_psigmat": None if cert is None else {
            "block": sigma.block_label(cert.block),
            "D": sub_json(cert.residual), "E": sub_json(cert.hall),
            "S": sub_json(cert.complement)},
        "theorem_A_B": sweep,
        "theorem_C": {"applicable": thm_c.applicable, "verdict": thm_c.verdict,
                      "detail": thm_c.detail},
    }
    report["status"] = "OK" if bf.value == sn.value else "FALSIFICATION"
    return report


# -- campaign --

@dataclass
class CellResult:
    key: str
    sigma: str
    order: int
    psigmat: bool
    routes_agree: bool
    sigma_full: bool
    theorem_c_applicable: bool
    theorem_c_verdict: bool
    theorem_a_nontrivial: int = 0
    theorem_b_nontrivial: int = 0
    checks: dict = field(default_factory=dict)
    falsifications: list = field(default_factory=list)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return dict(self.__dict__)


class _Checker:
    def __init__(self, cell: CellResult):
        self.cell = cell

    def __call__(self, name: str, ok: bool, witness=None, replays: bool | None = None):
        counts = self.cell.checks.setdefault(name, [0, 0])
        counts[0] += 1
        if not ok:
            counts[1] += 1
            rec = {"check": name, "witness": witness}
            if replays is not None:
                rec["witness_replays"] = replays
            self.cell.falsifications.append(rec)
        return ok

    def bulk(self, name: str, total: int, failures: list):
        self.cell.checks[name] = [total, len(failures)]
        for w in failures:
            self.cell.falsifications.append({"check": name, "witness": w})


def _hall_intersection_checks(G: FiniteGroup) -> tuple[int, list]:
    """``N & HK == (N & H)(N & K)`` over pairwise permutable triples with ``H`` Hall.

    Independent of sigma, so computed once per group.
    """
    hit = G._cache.get("hall_intersection")
    if hit is not None:
        return hit
    total, failures = 0, []
    subs = all_subgroups(G)
    W = G.whole()
    for H in subs:
        if not is_hall_subgroup(H, W):
            continue
        for K in subs:
            if not permutes(H, K):
                continue
            hk = _product_mask(H, K)
            for N in subs:
                if not (permutes(N, H) and permutes(N, K)):
                    continue
                total += 1
                if N.mask & hk != _product_mask(N & H, N & K):
                    failures.append({"H": sub_json(H), "K": sub_json(K), "N": sub_json(N)})
    G._cache["hall_intersection"] = (total, failures)
    return total, failures


def verify_cell(G: FiniteGroup, sigma: SigmaPartition, key: str) -> CellResult:
    t0 = time.perf_counter()
    W = G.whole()
    bf = is_psigmat_bruteforce(G, sigma)
    sn = is_psigmat_subnormal_criterion(G, sigma)
    thm_c = theoremC_criterion(G, sigma)
    full = is_sigma_full_sylow_type(G, sigma)
    cell = CellResult(key, str(sigma), G.order, bf.value, bf.value == sn.value, full,
                      thm_c.applicable, thm_c.verdict)
    check = _Checker(cell)
    subs = all_subgroups(G)
    normals = normal_subgroups(G)

    # PsigmaT routes and their witnesses
    check("route_agreement", bf.value == sn.value,
          {"bruteforce": bf.value, "subnormal": sn.value,
           "witness": _witness_json(sn if not sn.value else bf)},
          replay_witness(sn if not sn.value else bf, G, sigma))
    for v in (bf, sn):
        if not v.value:
            check("witness_replay", replay_witness(v, G, sigma), _witness_json(v))

    # quasinormal implies subnormal
    for A in subs:
        if is_sigma_quasinormal(A, W, sigma):
            check("quasinormal_implies_subnormal", is_sigma_subnormal(A, W, sigma), sub_json(A))

    # classical specialisation against a direct S-permutability check
    if sigma.is_classical_on(G.order) and G.order <= 48:
        for A in subs:
            check("s_permutable_crosscheck",
                  is_sigma_quasinormal(A, W, sigma) == is_s_permutable(A, W), sub_json(A))

    # soluble groups are sigma-full of Sylow type
    soluble = is_sigma_soluble(G, sigma)
    check("soluble_implies_full_sylow_type", not soluble or full)

    # sigma-nilpotency: subgroups, normal products, images, Frattini lifting
    for S in subs:
        if is_sigma_nilpotent(S, sigma):
            for T in all_subgroups(S):
                check("nilpotent_subgroups", is_sigma_nilpotent(T, sigma),
                      {"S": sub_json(S), "T": sub_json(T)})
    nil_normals = [N for N in normals if is_sigma_nilpotent(N, sigma)]
    for i, N1 in enumerate(nil_normals):
        for N2 in nil_normals[i + 1:]:
            check("nilpotent_normal_products", is_sigma_nilpotent(N1.join(N2), sigma),
                  {"N1": sub_json(N1), "N2": sub_json(N2)})
    for N in normals:
        q = quotient(G, N)
        for S in subs:
            if is_sigma_nilpotent(S, sigma):
                check("nilpotent_images", is_sigma_nilpotent(image(q, S), sigma),
                      {"N": sub_json(N), "S": sub_json(S)})
    phi = frattini(G)
    qphi = quotient(G, phi)
    for E in normals:
        if is_sigma_nilpotent(image(qphi, E), sigma):
            check("nilpotent_frattini_lift", is_sigma_nilpotent(E, sigma), sub_json(E))

    # residuals, including the residual of every quotient
    D = sigma_nilpotent_residual(G, sigma)
    check("residual_quotient_nilpotent", is_sigma_nilpotent(quotient(G, D).group, sigma))
    for N in normals:
        q = quotient(G, N)
        lhs = sigma_nilpotent_residual(q.group, sigma)
        check("residual_of_quotient", lhs == image(q, D.join(N)), sub_json(N))
    if sigma.is_classical_on(G.order):
        check("classical_residual", D == nilpotent_residual(G))
    check("power_automorphism_routes",
          induces_power_automorphisms(G, D) == induces_power_automorphisms_by_subgroups(G, D))
    for i in sorted(sigma_of(G.order, sigma)):
        up, low = O_upper(G, sigma, i), O_lower(G, sigma, i)
        for N in normals:
            if sigma_of(G.order // N.order, sigma) <= {i}:
                check("O_upper_minimal", up <= N, sub_json(N))
        for H in hall_block_subgroups(G, sigma, i):
            check("O_lower_in_halls", low <= H, sub_json(H))

    # Hall intersection identity
    check.bulk("hall_intersection", *_hall_intersection_checks(G))

    # special implies PsigmaT; both pass to quotients
    special = is_special_psigmat(G, sigma)
    check("special_implies_psigmat", not special or bf.value)
    for N in normals:
        Q = quotient(G, N).group
        if bf.value:
            check("psigmat_quotients", is_psigmat_bruteforce(Q, sigma).value, sub_json(N))
        if special:
            check("special_quotients", is_special_psigmat(Q, sigma), sub_json(N))

    # Theorems A and B over all normal sigma-Hall subgroups
    for N in normal_sigma_hall_subgroups(G, sigma):
        nontrivial = 1 < N.order < G.order
        if theoremA_premises(G, sigma, N):
            check("theorem_A", bf.value, sub_json(N))
            cell.theorem_a_nontrivial += nontrivial
        if theoremB_premises(G, sigma, N):
            check("theorem_B", bf.value, sub_json(N))
            cell.theorem_b_nontrivial += nontrivial

    # Theorem C
    if thm_c.applicable:
        check("theorem_C", thm_c.verdict == bf.value, thm_c.detail)

    cell.seconds = round(time.perf_counter() - t0, 4)
    return cell


def verify_entry(key: str, specs: tuple[str, ...] = SIGMA_SPECS,
                 cap: int | None = None) -> list[CellResult]:
    from .catalog import build

    G = build(key, cap)
    return [verify_cell(G, parse_sigma_spec(s), key) for s in specs]


def _verify_entry_json(args) -> list[dict]:
    return [c.to_json() for c in verify_entry(*args)]


def run_campaign(keys=None, specs: tuple[str, ...] = SIGMA_SPECS, cap: int | None = None,
                 jobs: int = 1) -> dict:
    """Run every cell and reduce in catalog order, then sigma-spec order."""
    keys = list(CATALOG) if keys is None else list(keys)
    specs = tuple(specs)
    tasks = [(k, specs, cap) for k in keys]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_entry_json, tasks))
    else:
        results = [_verify_entry_json(t) for t in tasks]
    cells = [c for group in results for c in group]
    return summarize(cells)


def summarize(cells: list[dict]) -> dict:
    applicable = [c for c in cells if c["theorem_c_applicable"]]
    agree = [c for c in applicable if c["theorem_c_verdict"] == c["psigmat"]]
    falsified = [c for c in cells if c["falsifications"]]
    return {
        "schema_version": SCHEMA_VERSION,
        "cells": cells,
        "summary": {
            "cells": len(cells),
            "falsified_cells": len(falsified),
            "falsifications": sum(len(c["falsifications"]) for c in cells),
            "route_agreement": sum(c["routes_agree"] for c in cells),
            "theorem_C_applicable": len(applicable),
            "theorem_C_applicable_true": sum(c["psigmat"] for c in applicable),
            "theorem_C_applicable_false": sum(not c["psigmat"] for c in applicable),
            "theorem_C_agreement": len(agree),
            "theorem_C_agreement_rate": (len(agree) / len(applicable)) if applicable else 1.0,
            "theorem_A_nontrivial_premises": sum(c["theorem_a_nontrivial"] for c in cells),
            "theorem_B_nontrivial_premises": sum(c["theorem_b_nontrivial"] for c in cells),
        },
    }
