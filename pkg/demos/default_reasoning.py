"""Default logic walkthrough: extensions, default arguments, and
justification undercuts.

Run:  python demos/default_reasoning.py
"""

from argumentation import (ClassicalArgument, DefaultTheory, default_arguments,
                           default_derives, default_extensions,
                           is_justification_undercut, parse_default_rule,
                           parse_formula)

P = parse_formula
D = parse_default_rule

DEFAULTS = frozenset({
    D("bird(Tweety) : !penguin(Tweety) & fly(Tweety) / fly(Tweety)"),
    D("penguin(Tweety) : bird(Tweety) / bird(Tweety)"),
    D("penguin(Tweety) : !fly(Tweety) / !fly(Tweety)"),
})


def demo_extensions():
    print("=" * 70)
    print("Extensions are fixpoints of the closure operator")
    print("=" * 70)
    for fact in ("bird(Tweety)", "penguin(Tweety)"):
        theory = DefaultTheory(DEFAULTS, frozenset({P(fact)}))
        exts = default_extensions(theory)
        print(f"  facts = {{{fact}}}")
        for ext in exts:
            print(f"    extension: {ext}")
        print(f"    fly(Tweety) follows:  {default_derives(theory, P('fly(Tweety)'))}")
        print(f"    !fly(Tweety) follows: {default_derives(theory, P('!fly(Tweety)'))}")


def demo_multiple_extensions():
    print()
    print("=" * 70)
    print("Conflicting defaults split into alternative extensions")
    print("=" * 70)
    theory = DefaultTheory(frozenset({D("q : p / p"), D("r : !p / !p")}),
                           frozenset({P("q"), P("r")}))
    for ext in default_extensions(theory):
        print(f"  extension: {ext}")
    print(f"  p credulously: {default_derives(theory, P('p'))}")
    print(f"  p skeptically: {default_derives(theory, P('p'), skeptical=True)}")


def demo_justification_undercuts():
    print()
    print("=" * 70)
    print("Attacking the assumption a default leans on")
    print("=" * 70)
    theory = DefaultTheory(DEFAULTS,
                           frozenset({P("bird(Tweety)"), P("penguin(Tweety)")}))
    (fly_arg,) = default_arguments(theory, P("fly(Tweety)"))
    (no_fly_arg,) = default_arguments(theory, P("!fly(Tweety)"))
    classical = ClassicalArgument(frozenset({P("penguin(Tweety)")}),
                                  P("penguin(Tweety)"))
    print(f"  flying argument:    {fly_arg}")
    print(f"  grounded attacker:  {classical}")
    print(f"  default attacker:   {no_fly_arg}")
    print(f"  classical undercuts flying: {is_justification_undercut(classical, fly_arg)}")
    print(f"  default undercuts flying:   {is_justification_undercut(no_fly_arg, fly_arg)}")
    print(f"  flying undercuts classical: {is_justification_undercut(fly_arg, classical)}")


if __name__ == "__main__":
    demo_extensions()
    demo_multiple_extensions()
    demo_justification_undercuts()
