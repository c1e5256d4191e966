"""Simple logic walkthrough: rules, arguments, attacks, and one cyclic graph.

Run:  python demos/simple_logic_arguments.py
"""

from argumentation import (SimpleKB, all_simple_arguments, derives_s,
                           generate_graph, grounded_extension, parse_literal,
                           parse_simple_rule, preferred_extensions,
                           simple_attack_kinds, stable_extensions)

L = parse_literal
R = parse_simple_rule


def kb(facts, rules):
    return SimpleKB(frozenset(L(f) for f in facts),
                    frozenset(R(r) for r in rules))


def demo_consequence():
    print("=" * 70)
    print("Modus ponens only: facts are premises, never conclusions")
    print("=" * 70)
    delta = kb(["a", "b"], ["a & b -> c", "c -> d"])
    for goal in ("c", "d", "a", "b"):
        print(f"  derives {goal}?  {derives_s(delta, L(goal))}")


def demo_attacks():
    print()
    print("=" * 70)
    print("Undercuts hit a rule body; rebuts hit the rival claim")
    print("=" * 70)
    metro = kb(["efficientMetro"], ["efficientMetro -> useMetro"])
    strike = kb(["strikeMetro"], ["strikeMetro -> !efficientMetro"])
    (a1,) = all_simple_arguments(metro)
    (a2,) = all_simple_arguments(strike)
    print(f"  A1 = {a1}")
    print(f"  A2 = {a2}")
    print(f"  A2 attacks A1 by: {sorted(k.value for k in simple_attack_kinds(a2, a1))}")

    deficit = kb(["govDeficit"], ["govDeficit -> cutGovSpending"])
    economy = kb(["weakEconomy"], ["weakEconomy -> !cutGovSpending"])
    (b1,) = all_simple_arguments(deficit)
    (b2,) = all_simple_arguments(economy)
    print(f"  B1 = {b1}")
    print(f"  B2 = {b2}")
    print(f"  B1 vs B2: {sorted(k.value for k in simple_attack_kinds(b1, b2))}, "
          f"B2 vs B1: {sorted(k.value for k in simple_attack_kinds(b2, b1))}")


def demo_cyclic_graph():
    print()
    print("=" * 70)
    print("A paraconsistent base can attack itself: self cycle + odd cycle")
    print("=" * 70)
    delta = kb(["a", "b", "c"], ["a & c -> !a", "b -> !c", "a & c -> !b"])
    graph = generate_graph(delta)
    for node in graph.nodes:
        print(f"  {node.id}: {'; '.join(node.support_texts())}  |-  {node.claim_text()}")
    for attack in sorted(graph.attacks, key=lambda a: (a.source, a.target)):
        print(f"  {attack.source} -> {attack.target}")
    print(f"  grounded extension : {sorted(grounded_extension(graph)) or '{}'}")
    print(f"  preferred          : {[sorted(e) for e in preferred_extensions(graph)]}")
    print(f"  stable             : {[sorted(e) for e in stable_extensions(graph)]}")


if __name__ == "__main__":
    demo_consequence()
    demo_attacks()
    demo_cyclic_graph()
