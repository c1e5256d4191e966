"""Acceptance suite: exact reproduction of the worked scenarios plus the
randomized property suites (fixed seeds, >= 200 cases each, zero tolerance).

Each criterion prints one PASS/FAIL line; run with ``pytest -v -s
tests/test_acceptance.py`` to see them as they execute.
"""

import contextlib
import itertools
import random
import time

from argumentation.attacks import AttackConfig, AttackKind, parse_kinds
from argumentation.classical import ClassicalArgument, classical_arguments
from argumentation.conditionals import (Conditional, p_entails,
                                        parse_conditional,
                                        preferential_arguments,
                                        preferential_attack_kinds)
from argumentation.defaults import (DefaultTheory,
                                    enumerate_extensions as default_extensions,
                                    is_justification_undercut,
                                    parse_default_rule, default_arguments)
from argumentation.formulas import Atom, parse_formula, parse_literal
from argumentation.graphs import (accepted_claims, complete_extensions,
                                  grounded_extension, preferred_extensions,
                                  stable_extensions)
from argumentation.instantiate import (GenerationConfig, build_argument,
                                       generate_graph, verify_descriptive)
from argumentation.graphs import ArgGraph, ArgNode, Attack
from argumentation.simple import (SimpleArgument, SimpleKB,
                                  all_simple_arguments, derives_s,
                                  parse_simple_rule, simple_attack_kinds)
from oracles import (TruthTable, brute_complete, brute_grounded,
                     brute_preferred, brute_stable, oracle_gamma_formulas,
                     random_attack_graph, random_default_theory,
                     random_formula, random_simple_kb, table_for)

P = parse_formula
L = parse_literal
C = parse_conditional
D = parse_default_rule


@contextlib.contextmanager
def criterion(number: int, description: str):
    try:
        yield
    except BaseException:
        print(f"criterion {number:>2} FAIL: {description}")
        raise
    print(f"criterion {number:>2} PASS: {description}")


def simple_kb(facts, rules):
    return SimpleKB(frozenset(L(f) for f in facts),
                    frozenset(parse_simple_rule(r) for r in rules))


# --- criterion 1 ------------------------------------------------------------


def test_criterion_01_cyclic_graph_reproduction():
    with criterion(1, "exhaustive simple-logic graph: 3 nodes, 5 edges, "
                      "grounded empty, stable = preferred = {{A3}}"):
        started = time.perf_counter()
        kb = simple_kb(["a", "b", "c"], ["a & c -> !a", "b -> !c", "a & c -> !b"])
        graph = generate_graph(kb)
        assert [(n.id, n.claim_text()) for n in graph.nodes] == [
            ("A1", "!a"), ("A2", "!b"), ("A3", "!c")]
        assert sorted((a.source, a.target) for a in graph.attacks) == [
            ("A1", "A1"), ("A1", "A2"), ("A2", "A3"), ("A3", "A1"), ("A3", "A2")]
        assert grounded_extension(graph) == frozenset()
        assert stable_extensions(graph) == (frozenset({"A3"}),)
        assert preferred_extensions(graph) == (frozenset({"A3"}),)
        assert time.perf_counter() - started < 1.0


# --- criterion 2 ------------------------------------------------------------


def test_criterion_02_simple_consequence():
    with criterion(2, "modus-ponens consequence: c and d derivable, a and b not"):
        kb = simple_kb(["a", "b"], ["a & b -> c", "c -> d"])
        assert derives_s(kb, L("c")) is True
        assert derives_s(kb, L("d")) is True
        assert derives_s(kb, L("a")) is False
        assert derives_s(kb, L("b")) is False


# --- criterion 3 ------------------------------------------------------------


def test_criterion_03_simple_attack_classification():
    with criterion(3, "metro pair is {undercut}; deficit pair mutually {rebut}"):
        metro_a1 = SimpleArgument(simple_kb(["efficientMetro"],
                                            ["efficientMetro -> useMetro"]),
                                  L("useMetro"))
        metro_a2 = SimpleArgument(simple_kb(["strikeMetro"],
                                            ["strikeMetro -> !efficientMetro"]),
                                  L("!efficientMetro"))
        assert simple_attack_kinds(metro_a2, metro_a1) == frozenset({AttackKind.UNDERCUT})
        deficit_a1 = SimpleArgument(simple_kb(["govDeficit"],
                                              ["govDeficit -> cutGovSpending"]),
                                    L("cutGovSpending"))
        deficit_a2 = SimpleArgument(simple_kb(["weakEconomy"],
                                              ["weakEconomy -> !cutGovSpending"]),
                                    L("!cutGovSpending"))
        assert simple_attack_kinds(deficit_a1, deficit_a2) == frozenset({AttackKind.REBUT})
        assert simple_attack_kinds(deficit_a2, deficit_a1) == frozenset({AttackKind.REBUT})


# --- criterion 4 ------------------------------------------------------------


def test_criterion_04_grounded_acceptance_flips_nonmonotonically():
    with criterion(4, "claim a grounded-accepted from {a}, lost after adding !a, "
                      "while the node set only grows"):
        config = GenerationConfig(focal_claims=(P("a"), P("!a")))
        before = generate_graph(frozenset({P("a")}), config)
        after = generate_graph(frozenset({P("a"), P("!a")}), config)
        assert P("a") in accepted_claims(before, "grounded")
        assert P("a") not in accepted_claims(after, "grounded")
        payloads_before = {n.payload for n in before.nodes}
        payloads_after = {n.payload for n in after.nodes}
        assert payloads_before <= payloads_after
        assert len(payloads_after) > len(payloads_before)


# --- criterion 5 ------------------------------------------------------------


def test_criterion_05_commute_claim_withdrawn():
    with criterion(5, "useMetro(Sid) grounded-accepted before the work-at-home "
                      "facts arrive and excluded after"):
        base = simple_kb(["workDay", "normal"],
                         ["workDay & normal -> useMetro(Sid)"])
        assert P("useMetro(Sid)") in accepted_claims(generate_graph(base), "grounded")
        grown = simple_kb(["workDay", "normal", "workAtHome(Sid)"],
                          ["workDay & normal -> useMetro(Sid)",
                           "workAtHome(Sid) -> !normal"])
        claims = accepted_claims(generate_graph(grown), "grounded")
        assert P("useMetro(Sid)") not in claims


# --- criterion 6 ------------------------------------------------------------


TWEETY_DEFAULTS = frozenset({
    D("bird(Tweety) : !penguin(Tweety) & fly(Tweety) / fly(Tweety)"),
    D("penguin(Tweety) : bird(Tweety) / bird(Tweety)"),
    D("penguin(Tweety) : !fly(Tweety) / !fly(Tweety)"),
})


def test_criterion_06_default_theory_extensions():
    with criterion(6, "bird base: one extension with fly; penguin base: one "
                      "extension with bird and not-fly"):
        bird = DefaultTheory(TWEETY_DEFAULTS, frozenset({P("bird(Tweety)")}))
        exts = default_extensions(bird)
        assert len(exts) == 1
        assert exts[0].entails_formula(P("fly(Tweety)"))
        penguin = DefaultTheory(TWEETY_DEFAULTS, frozenset({P("penguin(Tweety)")}))
        exts = default_extensions(penguin)
        assert len(exts) == 1
        assert exts[0].entails_formula(P("bird(Tweety)"))
        assert exts[0].entails_formula(P("!fly(Tweety)"))


# --- criterion 7 ------------------------------------------------------------


def test_criterion_07_justification_undercuts():
    with criterion(7, "classical and default attackers undercut the fly "
                      "argument; no undercut in the reverse directions"):
        theory = DefaultTheory(TWEETY_DEFAULTS,
                               frozenset({P("bird(Tweety)"), P("penguin(Tweety)")}))
        (top,) = default_arguments(theory, P("fly(Tweety)"))
        (right,) = default_arguments(theory, P("!fly(Tweety)"))
        left = ClassicalArgument(frozenset({P("penguin(Tweety)")}),
                                 P("penguin(Tweety)"))
        assert is_justification_undercut(left, top) is True
        assert is_justification_undercut(right, top) is True
        # reverse directions: the classical attacker uses no defaults, and
        # the two attackers leave each other's justifications untouched
        assert is_justification_undercut(top, left) is False
        assert is_justification_undercut(left, right) is False
        assert is_justification_undercut(right, left) is False


# --- criterion 8 ------------------------------------------------------------


def test_criterion_08_preferential_entailment():
    with criterion(8, "the five penguin-base inferences hold; penguin => fly "
                      "and contraposition do not"):
        kb = frozenset({C("penguin => bird"), C("penguin => !fly"),
                        C("bird => fly")})
        positives = ("penguin & bird => !fly", "fly => !penguin",
                     "bird => !penguin", "bird | penguin => fly",
                     "bird | penguin => !penguin")
        for text in positives:
            started = time.perf_counter()
            assert p_entails(kb, C(text)) is True, text
            assert time.perf_counter() - started < 1.0
        started = time.perf_counter()
        assert p_entails(kb, C("penguin => fly")) is False
        assert time.perf_counter() - started < 1.0
        assert p_entails(frozenset({C("bird => fly")}), C("!fly => !bird")) is False


# --- criterion 9 ------------------------------------------------------------


def test_criterion_09_direct_rebuttal_is_asymmetric():
    with criterion(9, "exception argument directly rebuts the rule argument "
                      "but not vice versa"):
        kb = frozenset({C("penguin => bird"), C("penguin => !fly"),
                        C("bird => fly")})
        (a1,) = preferential_arguments(kb, C("bird => fly"))
        (a2,) = preferential_arguments(kb, C("penguin & bird => !fly"))
        assert AttackKind.DIRECT_REBUTTAL in preferential_attack_kinds(a2, a1)
        assert AttackKind.DIRECT_REBUTTAL not in preferential_attack_kinds(a1, a2)


# --- criterion 10 -----------------------------------------------------------


def test_criterion_10_descriptive_medical_graph():
    with criterion(10, "treatment graph verifies under {direct-undercut, "
                       "defeater}; the rival edges are violated under {rebuttal}"):
        assignment = {
            "A1": build_argument("classical",
                                 ["bp(high)", "ok(diuretic)",
                                  "bp(high) & ok(diuretic) -> give(diuretic)",
                                  "!ok(diuretic) | !ok(betablocker)"],
                                 "give(diuretic) & !ok(betablocker)"),
            "A2": build_argument("classical",
                                 ["bp(high)", "ok(betablocker)",
                                  "bp(high) & ok(betablocker) -> give(betablocker)",
                                  "!ok(diuretic) | !ok(betablocker)"],
                                 "give(betablocker) & !ok(diuretic)"),
            "A3": build_argument("classical",
                                 ["symptom(emphysema)",
                                  "symptom(emphysema) -> !ok(betablocker)"],
                                 "!ok(betablocker)"),
        }
        abstract = ArgGraph(
            (ArgNode("A1"), ArgNode("A2"), ArgNode("A3")),
            (Attack("A1", "A2"), Attack("A2", "A1"), Attack("A3", "A2")))
        good = verify_descriptive(abstract, assignment,
                                  AttackConfig(parse_kinds("direct-undercut,defeater")))
        assert good.passed
        assert len(good.confirmed) == 3
        bad = verify_descriptive(abstract, assignment,
                                 AttackConfig(frozenset({AttackKind.REBUTTAL})))
        violated = {(e.source, e.target) for e in bad.violated}
        assert ("A1", "A2") in violated and ("A2", "A1") in violated
        assert not bad.passed


# --- criterion 11: property suites ------------------------------------------


SIMPLE_ATOMS = [Atom(n) for n in "abcd"]
SMALL_ATOMS = [Atom(n) for n in "abc"]


def test_criterion_11a_construction_monotonicity():
    with criterion(11, "(a) argument construction is monotonic for simple "
                       "and classical bases (200 cases each)"):
        rng = random.Random(110001)
        for _ in range(200):
            big = random_simple_kb(rng, SIMPLE_ATOMS, max_facts=5, max_rules=6)
            small = SimpleKB(frozenset(f for f in big.facts if rng.random() < 0.6),
                             frozenset(r for r in big.rules if rng.random() < 0.6))
            assert all_simple_arguments(small) <= all_simple_arguments(big)
        rng = random.Random(110002)
        for _ in range(200):
            big = {random_formula(rng, SMALL_ATOMS, depth=1)
                   for _ in range(rng.randint(1, 6))}
            small = {f for f in big if rng.random() < 0.6}
            claim = random_formula(rng, SMALL_ATOMS, depth=1)
            small_supports = {a.support for a in classical_arguments(small, claim)}
            big_supports = {a.support for a in classical_arguments(big, claim)}
            assert small_supports <= big_supports


def _random_conditional_kb(rng, atoms, size=3):
    return frozenset(Conditional(random_formula(rng, atoms, 1),
                                 random_formula(rng, atoms, 1))
                     for _ in range(rng.randint(0, size)))


def test_criterion_11b_klm_closure_properties():
    with criterion(11, "(b) the eight System P closure rules hold on random "
                       "bases (200 cases per rule)"):
        from argumentation.formulas import And, Not, Or
        atoms = SMALL_ATOMS
        cases = 200

        rng = random.Random(111001)  # REF
        for _ in range(cases):
            kb = _random_conditional_kb(rng, atoms)
            a = random_formula(rng, atoms, 1)
            assert p_entails(kb, Conditional(a, a))

        rng = random.Random(111002)  # LLE
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(a, c)}
            b = Not(Not(a))
            if p_entails(kb, Conditional(a, c)):
                hits += 1
                assert p_entails(kb, Conditional(b, c))
        assert hits >= 30

        rng = random.Random(111003)  # RW
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            weaker = Or((a, random_formula(rng, atoms, 1)))
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(c, a)}
            if p_entails(kb, Conditional(c, a)):
                hits += 1
                assert p_entails(kb, Conditional(c, weaker))
        assert hits >= 30

        rng = random.Random(111004)  # CUT
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            b = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(a, b), Conditional(And((a, b)), c)}
            if p_entails(kb, Conditional(a, b)) and \
                    p_entails(kb, Conditional(And((a, b)), c)):
                hits += 1
                assert p_entails(kb, Conditional(a, c))
        assert hits >= 30

        rng = random.Random(111005)  # AND
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            b = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(a, b), Conditional(a, c)}
            if p_entails(kb, Conditional(a, b)) and p_entails(kb, Conditional(a, c)):
                hits += 1
                assert p_entails(kb, Conditional(a, And((b, c))))
        assert hits >= 30

        rng = random.Random(111006)  # OR
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            b = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(a, c), Conditional(b, c)}
            if p_entails(kb, Conditional(a, c)) and p_entails(kb, Conditional(b, c)):
                hits += 1
                assert p_entails(kb, Conditional(Or((a, b)), c))
        assert hits >= 30

        rng = random.Random(111007)  # CM
        hits = 0
        for _ in range(cases):
            a = random_formula(rng, atoms, 1)
            b = random_formula(rng, atoms, 1)
            c = random_formula(rng, atoms, 1)
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= {Conditional(a, b), Conditional(a, c)}
            if p_entails(kb, Conditional(a, b)) and p_entails(kb, Conditional(a, c)):
                hits += 1
                assert p_entails(kb, Conditional(And((a, b)), c))
        assert hits >= 30

        rng = random.Random(111008)  # LOOP
        hits = 0
        for _ in range(cases):
            k = rng.randint(1, 3)
            chain = [random_formula(rng, atoms, 1) for _ in range(k + 1)]
            links = [Conditional(chain[i], chain[i + 1]) for i in range(k)]
            links.append(Conditional(chain[k], chain[0]))
            kb = _random_conditional_kb(rng, atoms)
            if rng.random() < 0.7:
                kb |= set(links)
            if all(p_entails(kb, link) for link in links):
                hits += 1
                assert p_entails(kb, Conditional(chain[0], chain[k]))
        assert hits >= 30


def test_criterion_11c_classical_arguments_vs_brute_force():
    with criterion(11, "(c) classical-argument minimality and consistency "
                       "match the subset oracle (200 cases)"):
        rng = random.Random(110003)
        for _ in range(200):
            size = rng.randint(1, 8)
            delta = sorted({random_formula(rng, SMALL_ATOMS, depth=1)
                            for _ in range(size)}, key=str)
            claim = random_formula(rng, SMALL_ATOMS, depth=1)
            table = table_for([*delta, claim])
            entailing = [frozenset(s) for k in range(len(delta) + 1)
                         for s in itertools.combinations(delta, k)
                         if table.consistent(s) and table.entails(s, claim)]
            minimal = {s for s in entailing if not any(t < s for t in entailing)}
            engine = {a.support for a in classical_arguments(delta, claim)}
            assert engine == minimal
            for support in engine:
                assert table.consistent(support)
                for phi in support:
                    assert not (table.consistent(support - {phi})
                                and table.entails(support - {phi}, claim))


def test_criterion_11d_default_extensions_reverify():
    with criterion(11, "(d) every emitted default extension satisfies the "
                       "closure fixpoint equation (200 theories)"):
        rng = random.Random(110004)
        total = 0
        for _ in range(200):
            theory = random_default_theory(rng, SMALL_ATOMS,
                                           max_defaults=4, max_facts=2)
            atoms = set()
            from argumentation.formulas import formula_atoms
            for f in theory.facts:
                atoms |= formula_atoms(f)
            for r in theory.defaults:
                for f in (r.pre, r.just, r.cons):
                    atoms |= formula_atoms(f)
            table = TruthTable(atoms)
            for ext in default_extensions(theory):
                if ext.inconsistent:
                    assert not table.consistent(theory.facts)
                    continue
                total += 1
                represented = ext.formulas()
                gamma = oracle_gamma_formulas(theory, frozenset(represented), table)
                assert table.models_mask(gamma) == table.models_mask(represented)
        assert total >= 150


def test_criterion_11e_semantics_vs_subset_enumeration():
    with criterion(11, "(e) grounded is in every complete extension and "
                       "stable extensions are preferred (200 graphs)"):
        rng = random.Random(110005)
        for _ in range(200):
            ids, pairs = random_attack_graph(rng, max_nodes=10)
            graph = ArgGraph(tuple(ArgNode(i) for i in ids),
                             tuple(Attack(s, t) for s, t in pairs))
            grounded = grounded_extension(graph)
            complete = complete_extensions(graph)
            preferred = preferred_extensions(graph)
            stable = stable_extensions(graph)
            assert grounded == brute_grounded(ids, pairs)
            assert set(complete) == set(brute_complete(ids, pairs))
            assert set(preferred) == set(brute_preferred(ids, pairs))
            assert set(stable) == set(brute_stable(ids, pairs))
            for ext in complete:
                assert grounded <= ext
            assert set(stable) <= set(preferred)
