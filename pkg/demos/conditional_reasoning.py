"""System P walkthrough: tolerance, p-entailment, preferential attacks.

Run:  python demos/conditional_reasoning.py
"""

from argumentation import (p_entails, parse_conditional,
                           preferential_arguments, preferential_attack_kinds,
                           tolerance_layers)

C = parse_conditional

PENGUIN_KB = frozenset({C("penguin => bird"), C("penguin => !fly"),
                        C("bird => fly")})


def demo_inferences():
    print("=" * 70)
    print("Defeasible inference without retraction of conditionals")
    print("=" * 70)
    print("  base:", "; ".join(sorted(str(c) for c in PENGUIN_KB)))
    for text in ("penguin & bird => !fly", "fly => !penguin", "bird => !penguin",
                 "bird | penguin => fly", "bird | penguin => !penguin",
                 "penguin => fly"):
        print(f"  |~ {text:32}  {p_entails(PENGUIN_KB, C(text))}")
    print("  contraposition is not available:")
    print(f"  {{bird => fly}} |~ !fly => !bird     "
          f"{p_entails(frozenset({C('bird => fly')}), C('!fly => !bird'))}")


def demo_tolerance():
    print()
    print("=" * 70)
    print("Consistency = the base can be exhausted by iterated tolerance")
    print("=" * 70)
    for i, layer in enumerate(tolerance_layers(PENGUIN_KB)):
        print(f"  layer {i}: " + "; ".join(str(c) for c in layer))


def demo_attacks():
    print()
    print("=" * 70)
    print("The exception directly rebuts the rule, never the reverse")
    print("=" * 70)
    (rule_arg,) = preferential_arguments(PENGUIN_KB, C("bird => fly"))
    (exception_arg,) = preferential_arguments(PENGUIN_KB, C("penguin & bird => !fly"))
    print(f"  A1 = {rule_arg}")
    print(f"  A2 = {exception_arg}")
    print(f"  A2 vs A1: {sorted(k.value for k in preferential_attack_kinds(exception_arg, rule_arg))}")
    print(f"  A1 vs A2: {sorted(k.value for k in preferential_attack_kinds(rule_arg, exception_arg))}")

    wet = frozenset({C("matchIsStruck => matchLights"),
                     C("matchIsStruck & matchIsWet => !matchLights")})
    (m1,) = preferential_arguments(wet, C("matchIsStruck => matchLights"))
    (m2,) = preferential_arguments(wet, C("matchIsStruck & matchIsWet => !matchLights"))
    print(f"  wet match vs struck match: "
          f"{sorted(k.value for k in preferential_attack_kinds(m2, m1))}")


if __name__ == "__main__":
    demo_inferences()
    demo_tolerance()
    demo_attacks()
