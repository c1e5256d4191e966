"""Classical logic walkthrough: minimal consistent supports, the attack
taxonomy, and a descriptive graph checked against assigned arguments.

Run:  python demos/classical_arguments.py
"""

from argumentation import (ArgGraph, ArgNode, Attack, AttackConfig,
                           build_argument, classical_arguments,
                           classical_attack_kinds, parse_formula, parse_kinds,
                           verify_descriptive)

P = parse_formula
ALL_KINDS = AttackConfig(parse_kinds("undercut,direct-undercut,rebuttal,defeater"))


def demo_integrity_constraint_undercut():
    print("=" * 70)
    print("An integrity constraint undercuts two premises at once")
    print("=" * 70)
    delta = {P("lowCost"), P("luxury"), P("lowCost & luxury -> goodFlight"),
             P("!lowCost | !luxury")}
    (a1,) = classical_arguments(delta, P("goodFlight"))
    (a2,) = classical_arguments(delta, P("!lowCost | !luxury"))
    print(f"  A1 = {a1}")
    print(f"  A2 = {a2}")
    kinds = classical_attack_kinds(a2, a1, ALL_KINDS)
    print(f"  A2 attacks A1 by: {sorted(k.value for k in kinds)}")
    print("  (an undercut, though not a direct undercut of any single premise)")


def demo_treatment_choice():
    print()
    print("=" * 70)
    print("Descriptive graph: two rival treatments plus a contraindication")
    print("=" * 70)
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
    abstract = ArgGraph((ArgNode("A1"), ArgNode("A2"), ArgNode("A3")),
                        (Attack("A1", "A2"), Attack("A2", "A1"), Attack("A3", "A2")))
    for node_id, argument in assignment.items():
        print(f"  {node_id} = {argument}")

    report = verify_descriptive(abstract, assignment,
                                AttackConfig(parse_kinds("direct-undercut,defeater")))
    print("  with kinds {direct-undercut, defeater}:")
    for check in report.edges:
        kinds = ", ".join(sorted(k.value for k in check.kinds)) or "-"
        print(f"    {check.source} -> {check.target}: "
              f"{'confirmed' if check.confirmed else 'violated'} [{kinds}]")
    print(f"    verification: {'pass' if report.passed else 'fail'}")

    report = verify_descriptive(abstract, assignment,
                                AttackConfig(parse_kinds("rebuttal")))
    print("  with kinds {rebuttal} only:")
    for check in report.edges:
        print(f"    {check.source} -> {check.target}: "
              f"{'confirmed' if check.confirmed else 'violated'}")
    print(f"    verification: {'pass' if report.passed else 'fail'}")
    print("  (the rivals' claims are not negations of each other, so the "
          "mutual edges need the defeater reading)")


if __name__ == "__main__":
    demo_integrity_constraint_undercut()
    demo_treatment_choice()
