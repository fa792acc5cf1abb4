"""File formats: graphs, reflection sets, complexes (JSON and DOT)."""

import json

from .complex import CubeComplex
from .graph import DefiningGraph
from .words import Reflection, format_word, parse_word, parse_words


def graph_from_dict(data):
    verts = list(data["vertices"])
    edges = []
    for e in data.get("edges", []):
        if len(e) != 2:
            raise ValueError(f"edge {e!r} must have two endpoints")
        edges.append(tuple(e))
    return DefiningGraph(verts, edges)


def graph_to_dict(graph):
    return {"vertices": list(graph.vertices),
            "edges": [[graph.vertices[i], graph.vertices[j]] for i, j in graph.edges]}


def load_graph(path):
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def save_graph(graph, path):
    with open(path, "w") as fh:
        json.dump(graph_to_dict(graph), fh, indent=1)


def reflections_to_json(graph, refl):
    return [r.format(graph) for r in refl]


def reflections_from_json(graph, data):
    out = []
    for item in data:
        conj = parse_word(graph, item["conjugator"]) if item["conjugator"].strip() else ()
        out.append(Reflection(conj, graph.index(item["core"].strip())))
    return out


def load_words(graph, path):
    """Words from a file: a JSON list of strings, or one word per line."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return [parse_word(graph, line) for line in text.splitlines() if line.strip()]
    if not isinstance(data, list):
        raise ValueError("word file must hold a JSON list")
    if data and isinstance(data[0], dict):
        return [r.word for r in reflections_from_json(graph, data)]
    return [parse_word(graph, w) for w in data]


def words_from_text(graph, text):
    if not text.strip():
        return []
    return [w for w in parse_words(graph, text) if w]


# complexes -----------------------------------------------------------------

def complex_to_dict(cx):
    g = cx.graph
    vids = sorted(cx.verts)
    return {
        "graph": graph_to_dict(g),
        "basepoint": cx.basepoint,
        "vertices": vids,
        "edges": [{"id": e, "ends": [u, v], "label": g.vertices[s], "origin": e in cx.origin}
                  for e, (u, v, s) in sorted(cx.edges.items())],
        "cubes": [{"id": cid, "dim": c.dim, "labels": [g.vertices[s] for s in c.labels],
                   "corners": list(c.corners), "edges": list(c.edges)}
                  for cid, c in sorted(cx.cubes.items())],
    }


def complex_from_dict(data, graph=None):
    g = graph or graph_from_dict(data["graph"])
    cx = CubeComplex(g)
    vmap = {}
    for v in data["vertices"]:
        vmap[v] = cx.add_vertex()
    emap = {}
    for e in data["edges"]:
        u, v = e["ends"]
        emap[e["id"]] = cx.add_edge(vmap[u], vmap[v], g.index(e["label"]), origin=e["origin"])
    for c in data["cubes"]:
        labels = tuple(g.index(s) for s in c["labels"])
        cx.add_cube(labels, tuple(vmap[v] for v in c["corners"]), tuple(emap[e] for e in c["edges"]))
    cx.basepoint = vmap[data["basepoint"]]
    cx.touched_vertices.clear()
    cx.touched_cubes.clear()
    return cx


def complex_to_json(cx):
    return json.dumps(complex_to_dict(cx), indent=1)


def complex_to_dot(cx):
    g = cx.graph
    lines = ["graph complex {"]
    for v in sorted(cx.verts):
        attrs = ' [shape=doublecircle, style=filled, fillcolor=lightgrey]' if v == cx.basepoint else ""
        lines.append(f"  v{v}{attrs};")
    for e, (u, v, s) in sorted(cx.edges.items()):
        style = "" if e in cx.origin else ", style=dashed"
        lines.append(f'  v{u} -- v{v} [label="{g.vertices[s]}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(cx, fmt="json"):
    """Serialized complex as bytes."""
    if fmt == "json":
        return complex_to_json(cx).encode()
    if fmt == "dot":
        return complex_to_dot(cx).encode()
    raise ValueError(f"unsupported format {fmt!r}")


def complexes_isomorphic(a, b):
    """Label-preserving isomorphism of 1-skeleta that matches basepoints and cube counts."""
    if (len(a.verts), len(a.edges), len(a.cubes)) != (len(b.verts), len(b.edges), len(b.cubes)):
        return False
    sig_a = sorted(_signature(a))
    sig_b = sorted(_signature(b))
    if sig_a != sig_b:
        return False
    phi = {a.basepoint: b.basepoint}
    stack = [a.basepoint]
    while stack:
        x = stack.pop()
        y = phi[x]
        la = sorted((a.edges[e][2], a.other_end(e, x)) for e in a.inc[x])
        lb = sorted((b.edges[e][2], b.other_end(e, y)) for e in b.inc[y])
        if [s for s, _ in la] != [s for s, _ in lb]:
            return False
        for (s, x2), (_, y2) in zip(la, lb):
            # folded complexes have at most one edge per label at a vertex
            if x2 in phi:
                if phi[x2] != y2:
                    return False
            else:
                phi[x2] = y2
                stack.append(x2)
    return len(phi) == len(a.verts) and len(set(phi.values())) == len(phi)


def _signature(cx):
    return [tuple(sorted(cx.edges[e][2] for e in cx.inc[v])) for v in cx.verts]


def describe(graph, w):
    return format_word(graph, w)
