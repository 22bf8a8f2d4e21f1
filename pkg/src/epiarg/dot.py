"""Graphviz DOT rendering of both model kinds.

Epistemic models: one node per world labelled with its true propositions,
one dashed undirected edge per agent per indistinguishable pair (self-loops
included unless suppressed).  Argument models: one node per argument
labelled with the agents it is available to, and one directed edge per
attack pair, drawn from the attacked argument to its attacker so diagrams
read "is attacked by"; ``reverse_arrows`` flips that.
"""

from __future__ import annotations

from .models import ArgumentModel, EpistemicModel


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def epistemic_to_dot(model: EpistemicModel, skip_self_loops: bool = False) -> str:
    lines = ["digraph {", "  rankdir=LR;"]
    for world in model.worlds:
        trues = model.true_propositions(world)
        label = world + (":" + ",".join(trues) if trues else "")
        lines.append(f"  {_quote(world)} [label={_quote(label)}];")
    index = {w: i for i, w in enumerate(model.worlds)}
    for agent in model.signature.agents:
        seen = set()
        for u, v in sorted(model.relation(agent), key=lambda pair: (index.get(pair[0], len(index)), index.get(pair[1], len(index)))):
            if u == v and skip_self_loops:
                continue
            edge = (u, v) if index.get(u, 0) <= index.get(v, 0) else (v, u)
            if edge in seen:
                continue
            seen.add(edge)
            lines.append(f"  {_quote(edge[0])} -> {_quote(edge[1])} [label={_quote('E(' + agent + ')')}, style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def argument_to_dot(model: ArgumentModel, reverse_arrows: bool = False) -> str:
    lines = ["digraph {", "  rankdir=LR;"]
    for argument in model.arguments:
        holders = tuple(a for a in model.signature.agents if argument in model.available_to(a))
        label = argument + (":" + ",".join(holders) if holders else "")
        lines.append(f"  {_quote(argument)} [label={_quote(label)}];")
    index = {a: i for i, a in enumerate(model.arguments)}
    for prop in model.signature.propositions:
        for attacked, attacker in sorted(model.attack(prop), key=lambda pair: (index.get(pair[0], len(index)), index.get(pair[1], len(index)))):
            tail, head = (attacker, attacked) if reverse_arrows else (attacked, attacker)
            lines.append(f"  {_quote(tail)} -> {_quote(head)} [label={_quote('A(' + prop + ')')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
