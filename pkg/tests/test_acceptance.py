"""One line per acceptance criterion: PASS/FAIL, elapsed time against its limit.

Lines are printed as each test runs (visible with ``-s``) and repeated in
the pytest terminal summary.
"""

import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE
from oracles import brute_h1_order, random_finite_module, random_unimodular
from crossedcoh.braided import is_symmetric_braiding
from crossedcoh.fixtures import crossed_fixtures, fixture_morphisms
from crossedcoh.groups import make_group
from crossedcoh.hyper import check_exact_sequence, h1_bijective_under_quasi_iso, h1_pointed
from crossedcoh.modules import build_unitary_example, fg_group, make_gamma_module, mod_h1, two_torsion_plus_quotient
from crossedcoh.obstruction import kang_criterion, neutrality_orbit_report
from crossedcoh.randomized import random_instances
from crossedcoh.scenarios import check_random_instance, run_scenario, scenario_axioms


@contextmanager
def criterion(number, title, limit):
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    finally:
        elapsed = time.perf_counter() - start
        ok = state["ok"] and elapsed < limit
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
        if state["detail"]:
            line += f"  {state['detail']}"
        ACCEPTANCE[number] = line
        print(line)
    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"


def test_criterion_1_unitary_kernel():
    with criterion(1, "unitary --n 1 and --n 2: kernel (2,2,2), each under 10s", 20) as st:
        results = {}
        for n in (1, 2):
            t = time.perf_counter()
            rep = run_scenario("unitary", n=n)
            kernel = {c.name: c.computed for c in rep.checks}["kernel invariant factors"]
            results[n] = (kernel, rep.passed, time.perf_counter() - t)
        st["detail"] = ", ".join(f"n={n}: {tuple(k)} in {dt:.2f}s" for n, (k, _, dt) in results.items())
        st["ok"] = all(k == [2, 2, 2] and ok and dt < 10 for k, ok, dt in results.values())
    assert st["ok"], results


def test_criterion_2_h1_structure():
    with criterion(2, "mod_h1(X) = X/2X + X_2 for n = 1, 2, 3", 30) as st:
        got = {}
        for n in (1, 2, 3):
            mx, _, _ = build_unitary_example(n)
            got[n] = (mod_h1(mx).invariant_factors, two_torsion_plus_quotient(mx.module))
        st["detail"] = ", ".join(f"n={n}: {h}" for n, (h, _) in got.items())
        st["ok"] = all(h == q for h, q in got.values())
    assert st["ok"], got


def test_criterion_3_zmod8():
    with criterion(3, "Z/8 sequence: δ[x]≠0, δ[2x]=0, C^Γ={0,2x}, σx−x=4x", 1) as st:
        rep = run_scenario("zmod8")
        c = {k.name: k.computed for k in rep.checks}
        st["ok"] = (
            rep.passed
            and c["δ[x] nontrivial"] is True
            and c["δ[2x] trivial"] is True
            and c["C^Γ"] == [0, 2]
            and c["σ(x) − x"] == [4]
        )
    assert st["ok"], rep.to_text()


def test_criterion_4_pu2():
    with criterion(4, "Q8 -> V4: H1, abelian H1, cr1, non-hom witness, braiding witness", 5) as st:
        rep = run_scenario("pu2")
        d = rep.to_dict()
        c = {k["check"]: k["computed"] for k in d["checks"]}
        st["ok"] = (
            rep.passed
            and c["braiding witness"] == ["b1", "b2"]
            and c["pairing value at witness"] == "-1"
            and c["pointed H1 classes"] == 2
            and c["abelian H1 order"] == 2
            and c["induced map is a homomorphism"] is False
            and d["values"]["non-homomorphism witness"]["classes"] == ["b1", "b2"]
        )
    assert st["ok"], rep.to_text()


def test_criterion_5_braided_suite():
    with criterion(5, "fixtures + 200 random braided crossed modules, zero failures", 300) as st:
        fixtures_rep = scenario_axioms(seed=0, random_count=0)
        instances = random_instances(200, seed=0)
        sizes_ok = all(
            i.cm.A.order <= 16 and i.cm.G.order <= 16 and i.cm.gamma.order <= 4 for i in instances
        )
        failures, nonabelian = [], 0
        for inst in instances:
            problems = check_random_instance(inst, seed=0)
            if problems == ["H1 not abelian"] and not is_symmetric_braiding(inst.braiding):
                nonabelian += 1  # abelianness is only claimed for symmetric braidings
            elif problems:
                failures.append((inst.name, problems))
        st["detail"] = f"{len(instances)} instances, {len(failures)} failures, {nonabelian} non-symmetric with non-abelian H1"
        st["ok"] = fixtures_rep.passed and sizes_ok and not failures and len(instances) >= 200
    assert st["ok"], (fixtures_rep.to_text(), failures[:5])


def test_criterion_6_kang():
    with criterion(6, "image of cr1 <=> Δ neutral on every class; neutrality constant on orbits", 60) as st:
        bad, saw_non_neutral = [], False
        for fx in crossed_fixtures():
            h1 = h1_pointed(fx.cm)
            k = kang_criterion(fx.cm, h1=h1)
            saw_non_neutral |= any(not r.delta_neutral for r in k.rows)
            if not k.ok:
                bad.append(fx.name)
            if not neutrality_orbit_report(fx.cm, h1).ok:
                bad.append(fx.name + " (orbits)")
        st["detail"] = f"failures: {bad or 'none'}"
        st["ok"] = not bad and saw_non_neutral
    assert st["ok"], bad


def test_criterion_7_exact_and_quasi_iso():
    with criterion(7, "exact at every junction; quasi-isos give bijections", 60) as st:
        bad = []
        for fx in crossed_fixtures():
            rep = check_exact_sequence(fx.cm, strict=False)
            bad += [f"{fx.name}: {j}" for j, ok in rep.junctions.items() if not ok]
        qi = 0
        for name, m, is_qi in fixture_morphisms():
            r = h1_bijective_under_quasi_iso(m)
            if r.results["quasi-isomorphism"].passed != is_qi:
                bad.append(f"{name}: quasi-iso detection")
            if is_qi:
                qi += 1
                if not r.ok:
                    bad.append(f"{name}: {r.failed()}")
        st["detail"] = f"{qi} quasi-isomorphisms, failures: {bad or 'none'}"
        st["ok"] = not bad and qi > 0
    assert st["ok"], bad


def test_criterion_8_oracle():
    with criterion(8, "SNF H1 order = brute force on 60 random modules", 120) as st:
        rng = random.Random(1)
        mismatches = []
        for _ in range(60):
            label, fm = random_finite_module(rng, max_order=4096, max_gamma=8)
            assert fm.order <= 4096 and len(fm.gamma_table) <= 8
            n = len(fm.moduli)
            Q, Qi = random_unimodular(rng, n)
            rels = [[int(fm.moduli[i] * Qi[r, i]) for r in range(n)] for i in range(n)]
            acts = [(Qi @ a @ Q).tolist() for a in fm.action]
            m = make_gamma_module(fg_group(n, rels), make_group(fm.gamma_table), acts)
            if mod_h1(m).order != brute_h1_order(fm):
                mismatches.append(label)
        st["detail"] = f"mismatches: {mismatches or 'none'}"
        st["ok"] = not mismatches
    assert st["ok"], mismatches
