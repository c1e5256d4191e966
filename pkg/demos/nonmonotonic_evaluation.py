"""Construction is monotonic, evaluation is not: growing a knowledge base
never removes arguments, yet accepted claims can be withdrawn.

Run:  python demos/nonmonotonic_evaluation.py
"""

from argumentation import (GenerationConfig, SimpleKB, accepted_claims,
                           generate_graph, parse_formula, parse_literal,
                           parse_simple_rule, print_formula)

P = parse_formula
L = parse_literal
R = parse_simple_rule


def show(graph, title):
    print(f"  {title}")
    for node in graph.nodes:
        print(f"    {node.id}: {'; '.join(node.support_texts())}  |-  {node.claim_text()}")
    for attack in sorted(graph.attacks, key=lambda a: (a.source, a.target)):
        print(f"    {attack.source} -> {attack.target}")
    claims = sorted(print_formula(c) for c in accepted_claims(graph, "grounded"))
    print(f"    grounded-accepted claims: {claims or '(none)'}")


def demo_classical_flip():
    print("=" * 70)
    print("Adding a contrary premise only adds nodes, yet 'a' is withdrawn")
    print("=" * 70)
    config = GenerationConfig(focal_claims=(P("a"), P("!a")))
    show(generate_graph(frozenset({P("a")}), config), "knowledge = {a}")
    show(generate_graph(frozenset({P("a"), P("!a")}), config), "knowledge = {a, !a}")


def demo_commute_flip():
    print()
    print("=" * 70)
    print("A working-from-home fact disables the commuting rule")
    print("=" * 70)
    base = SimpleKB(frozenset({L("workDay"), L("normal")}),
                    frozenset({R("workDay & normal -> useMetro(Sid)")}))
    show(generate_graph(base), "before: work day, all normal")
    grown = SimpleKB(base.facts | {L("workAtHome(Sid)")},
                     base.rules | {R("workAtHome(Sid) -> !normal")})
    show(generate_graph(grown), "after: Sid works at home today")


if __name__ == "__main__":
    demo_classical_flip()
    demo_commute_flip()
