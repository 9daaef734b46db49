"""Text, DOT and JSON renderings of labeled posets and label listings.

The structured form is plain JSON::

    {"title": "C6",
     "nodes": [{"id": "[4,2]|[2]", "name": "[4,2]|[2]", "special": true, "dual": "[5,2]|[]"}, ...],
     "edges": [["[6]|[]", "[4,2]|[2]"], ...]}

Edges are (upper, lower) cover pairs.  Ids are the label strings, which
re-parse to the same label.
"""
from __future__ import annotations

import json

from .poset import LabeledPoset

__all__ = ["FORMATS", "poset_structured", "render_listing", "render_poset"]

FORMATS = ("text", "dot", "structured")


def _key(poset: LabeledPoset):
    order = {lab: i for i, lab in enumerate(poset.labels)}
    return lambda lab: order[lab]


def poset_structured(poset: LabeledPoset) -> dict:
    key = _key(poset)
    nodes = [
        {
            "id": str(lab),
            "name": poset.name(lab),
            "special": bool(poset.special.get(lab, True)),
            "dual": None if lab not in poset.duality else str(poset.duality[lab]),
        }
        for lab in poset.labels
    ]
    edges = sorted(poset.covers, key=lambda e: (key(e[0]), key(e[1])))
    return {"title": poset.title, "nodes": nodes, "edges": [[str(a), str(b)] for a, b in edges]}


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _render_dot(poset: LabeledPoset) -> str:
    data = poset_structured(poset)
    out = [f"digraph {_dot_id(poset.title)} {{", "  rankdir=TB;", "  edge [dir=none];"]
    for node in data["nodes"]:
        attrs = [f"label={_dot_id(node['name'])}"]
        if not node["special"]:
            attrs.append("shape=box")
        out.append(f"  {_dot_id(node['id'])} [{', '.join(attrs)}];")
    for upper, lower in data["edges"]:
        out.append(f"  {_dot_id(upper)} -> {_dot_id(lower)};")
    out.append("}")
    return "\n".join(out)


def _render_text(poset: LabeledPoset) -> str:
    data = poset_structured(poset)
    out = [f"{poset.title}: {len(data['nodes'])} nodes, {len(data['edges'])} covers"]
    for upper, lower in data["edges"]:
        out.append(f"  {upper} > {lower}")
    boxed = [n["id"] for n in data["nodes"] if not n["special"]]
    if boxed:
        out.append("nonspecial: " + " ".join(boxed))
    return "\n".join(out)


def render_poset(poset: LabeledPoset, fmt: str = "text") -> str:
    if fmt == "dot":
        return _render_dot(poset)
    if fmt == "structured":
        return json.dumps(poset_structured(poset), indent=2)
    if fmt == "text":
        return _render_text(poset)
    raise ValueError(f"unknown format {fmt!r}")


def render_listing(poset: LabeledPoset, fmt: str = "text") -> str:
    """One line per node: label, special flag and dual."""
    data = poset_structured(poset)
    if fmt == "structured":
        return json.dumps({"title": data["title"], "nodes": data["nodes"]}, indent=2)
    if fmt != "text":
        raise ValueError(f"listings support text and structured output, not {fmt!r}")
    width = max((len(n["name"]) for n in data["nodes"]), default=0)
    lines = []
    for n in data["nodes"]:
        flag = "special" if n["special"] else "nonspecial"
        lines.append(f"{n['name']:<{width}}  {flag:<10}  dbar={n['dual']}")
    return "\n".join(lines)
