"""Argument graphs and dialectical semantics.

Nodes carry a concrete argument from one of the base logics (or nothing,
for abstract graphs); edges are directed attacks annotated with the kinds
that justify them.  The semantics ignore the annotations: acceptability
depends only on the attack relation.

Extension computation starts from the grounded labelling obtained by
propagation (unattacked nodes in, anything they attack out, repeat) and
then searches over the still-undecided nodes; every complete extension
contains the grounded one and excludes everything the grounded labelling
rejects, so that search is exhaustive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .attacks import AttackKind
from .errors import EnumerationBoundError

SEMANTICS = ("grounded", "complete", "preferred", "stable")


@dataclass(frozen=True, slots=True)
class ArgNode:
    """Graph node: an id plus an optional base-logic argument payload."""

    id: str
    payload: object | None = None

    @property
    def is_abstract(self) -> bool:
        return self.payload is None

    @property
    def logic(self) -> str:
        return "abstract" if self.payload is None else self.payload.logic_name

    def claim_text(self) -> str:
        return "" if self.payload is None else self.payload.claim_text()

    def support_texts(self) -> tuple[str, ...]:
        return () if self.payload is None else self.payload.support_texts()


@dataclass(frozen=True, slots=True)
class Attack:
    source: str
    target: str
    kinds: frozenset[AttackKind] = frozenset()

    def kind_names(self) -> tuple[str, ...]:
        return tuple(sorted(k.value for k in self.kinds))


@dataclass(frozen=True, slots=True)
class ArgGraph:
    nodes: tuple[ArgNode, ...]
    attacks: tuple[Attack, ...]

    def __post_init__(self):
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node ids")
        known = set(ids)
        for attack in self.attacks:
            if attack.source not in known or attack.target not in known:
                raise ValueError(f"attack endpoint missing: {attack.source}->{attack.target}")

    def node_ids(self) -> tuple[str, ...]:
        return tuple(n.id for n in self.nodes)

    def node(self, node_id: str) -> ArgNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def attackers(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {n.id: set() for n in self.nodes}
        for a in self.attacks:
            out[a.target].add(a.source)
        return {k: frozenset(v) for k, v in out.items()}

    def targets(self) -> dict[str, frozenset[str]]:
        out: dict[str, set[str]] = {n.id: set() for n in self.nodes}
        for a in self.attacks:
            out[a.source].add(a.target)
        return {k: frozenset(v) for k, v in out.items()}


@dataclass(frozen=True, slots=True)
class ExtensionSet:
    semantics: str
    extensions: tuple[frozenset[str], ...]


def _sorted_extensions(extensions: Iterable[frozenset[str]]) -> tuple[frozenset[str], ...]:
    return tuple(sorted(extensions, key=lambda e: (len(e), sorted(e))))


def grounded_extension(graph: ArgGraph) -> frozenset[str]:
    """Least fixpoint of the defence operator."""
    attackers = graph.attackers()
    accepted: set[str] = set()
    rejected: set[str] = set()
    changed = True
    while changed:
        changed = False
        for node in graph.nodes:
            if node.id in accepted or node.id in rejected:
                continue
            if attackers[node.id] <= rejected:
                accepted.add(node.id)
                changed = True
        for node in graph.nodes:
            if node.id in rejected:
                continue
            if attackers[node.id] & accepted:
                if node.id in accepted:  # self-defeat cannot happen, guard anyway
                    continue
                rejected.add(node.id)
                changed = True
    return frozenset(accepted)


def _grounded_labelling(graph: ArgGraph) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    attackers = graph.attackers()
    accepted = grounded_extension(graph)
    rejected = frozenset(n.id for n in graph.nodes if attackers[n.id] & accepted)
    undecided = frozenset(n.id for n in graph.nodes) - accepted - rejected
    return accepted, rejected, undecided


def _is_conflict_free(members: frozenset[str], targets: Mapping[str, frozenset[str]]) -> bool:
    return all(not (targets[m] & members) for m in members)


def _defended_set(members: frozenset[str], graph: ArgGraph) -> frozenset[str]:
    attackers = graph.attackers()
    attacked_by_members: set[str] = set()
    targets = graph.targets()
    for m in members:
        attacked_by_members |= targets[m]
    return frozenset(n.id for n in graph.nodes
                     if attackers[n.id] <= attacked_by_members)


def complete_extensions(graph: ArgGraph, *, node_bound: int = 25) -> tuple[frozenset[str], ...]:
    """All complete extensions: conflict-free sets containing exactly the
    nodes they defend."""
    if len(graph.nodes) > node_bound:
        raise EnumerationBoundError(
            f"{len(graph.nodes)} nodes exceed the semantics bound {node_bound}")
    accepted, _, undecided = _grounded_labelling(graph)
    targets = graph.targets()
    candidates = sorted(undecided)
    found: list[frozenset[str]] = []
    for mask in range(1 << len(candidates)):
        extra = frozenset(candidates[i] for i in range(len(candidates)) if mask >> i & 1)
        members = accepted | extra
        if not _is_conflict_free(members, targets):
            continue
        if _defended_set(members, graph) == members:
            found.append(members)
    return _sorted_extensions(found)


def preferred_extensions(graph: ArgGraph, *, node_bound: int = 25) -> tuple[frozenset[str], ...]:
    complete = complete_extensions(graph, node_bound=node_bound)
    return _sorted_extensions(
        e for e in complete if not any(e < other for other in complete))


def stable_extensions(graph: ArgGraph, *, node_bound: int = 25) -> tuple[frozenset[str], ...]:
    """Conflict-free sets attacking every outside node (all are complete)."""
    everything = frozenset(graph.node_ids())
    targets = graph.targets()
    out = []
    for e in complete_extensions(graph, node_bound=node_bound):
        attacked: set[str] = set()
        for m in e:
            attacked |= targets[m]
        if everything - e <= attacked:
            out.append(e)
    return _sorted_extensions(out)


def enumerate_extensions(graph: ArgGraph, semantics: str, *,
                         node_bound: int = 25) -> ExtensionSet:
    if semantics == "grounded":
        extensions: tuple[frozenset[str], ...] = (grounded_extension(graph),)
    elif semantics == "complete":
        extensions = complete_extensions(graph, node_bound=node_bound)
    elif semantics == "preferred":
        extensions = preferred_extensions(graph, node_bound=node_bound)
    elif semantics == "stable":
        extensions = stable_extensions(graph, node_bound=node_bound)
    else:
        raise ValueError(f"unknown semantics {semantics!r} (one of {', '.join(SEMANTICS)})")
    return ExtensionSet(semantics, extensions)


def accepted_claims(graph: ArgGraph, semantics: str, mode: str = "credulous", *,
                    node_bound: int = 25) -> frozenset:
    """Claims of nodes in some (credulous) or every (skeptical) extension.

    Skeptical acceptance over an empty family of extensions (possible only
    for stable semantics) is vacuous, so every claim qualifies.
    """
    if mode not in ("credulous", "skeptical"):
        raise ValueError(f"unknown mode {mode!r}")
    extension_sets = enumerate_extensions(graph, semantics, node_bound=node_bound).extensions
    by_id = {n.id: n for n in graph.nodes}

    def claims(node_ids: Iterable[str]) -> frozenset:
        return frozenset(by_id[i].payload.claim_value for i in node_ids
                         if by_id[i].payload is not None)

    if mode == "credulous":
        out: frozenset = frozenset()
        for e in extension_sets:
            out |= claims(e)
        return out
    result = claims(by_id.keys())
    for e in extension_sets:
        result &= claims(e)
    return result


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(graph: ArgGraph) -> str:
    """One node per argument (label claim, tooltip support), directed edges."""
    lines = ["digraph argument_graph {", "  rankdir=LR;", "  node [shape=box];"]
    for node in graph.nodes:
        label = _dot_escape(node.claim_text() or node.id)
        tooltip = _dot_escape("; ".join(node.support_texts()))
        lines.append(f'  {node.id} [label="{label}", tooltip="{tooltip}"];')
    for attack in sorted(graph.attacks, key=lambda a: (a.source, a.target)):
        kinds = _dot_escape(", ".join(attack.kind_names()))
        lines.append(f'  {attack.source} -> {attack.target} [label="{kinds}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(graph: ArgGraph) -> dict:
    return {
        "nodes": [
            {
                "id": node.id,
                "logic": node.logic,
                "support": list(node.support_texts()),
                "claim": node.claim_text(),
            }
            for node in graph.nodes
        ],
        "attacks": [
            {"from": a.source, "to": a.target, "kinds": list(a.kind_names())}
            for a in sorted(graph.attacks, key=lambda a: (a.source, a.target))
        ],
    }


def to_json(graph: ArgGraph) -> str:
    return json.dumps(to_json_obj(graph), indent=2) + "\n"
