"""Completion sequences: standard completion, graph-loop completion, trees."""

import json
import os
from dataclasses import dataclass, field

from .complex import CubeComplex
from .graph import dominating_vertices
from .words import reduce

FINISHED = "finished"
BUDGET_EXCEEDED = "budget_exceeded"

DEFAULT_MAX_CELLS = 50_000
DEFAULT_MAX_OPS = 500_000


@dataclass(frozen=True)
class Budget:
    max_cells: int = DEFAULT_MAX_CELLS
    max_operations: int = DEFAULT_MAX_OPS

    def __post_init__(self):
        if self.max_cells <= 0 or self.max_operations <= 0:
            raise ValueError("budgets must be positive")

    @classmethod
    def from_env(cls, max_cells=None, max_operations=None):
        """Explicit values win, then RACGCOMP_MAX_CELLS / RACGCOMP_MAX_OPS, then defaults."""
        cells = max_cells or int(os.environ.get("RACGCOMP_MAX_CELLS", DEFAULT_MAX_CELLS))
        ops = max_operations or int(os.environ.get("RACGCOMP_MAX_OPS", DEFAULT_MAX_OPS))
        return cls(cells, ops)


UNLIMITED = Budget(10**12, 10**12)


@dataclass
class Stats:
    folds: int = 0
    identifications: int = 0
    attachments: int = 0
    stages: int = 0
    peak_cells: int = 0

    @property
    def operations(self):
        return self.folds + self.identifications + self.attachments

    def as_dict(self):
        return {"folds": self.folds, "identifications": self.identifications,
                "attachments": self.attachments, "stages": self.stages,
                "peak_cells": self.peak_cells}


@dataclass
class CompletionOutcome:
    status: str
    complex: CubeComplex
    stats: Stats
    trace: list = field(default_factory=list)

    @property
    def finished(self):
        return self.status == FINISHED


class _OverBudget(Exception):
    pass


class _Runner:
    """Shared machinery: fold/identify to a fixed point, with accounting."""

    def __init__(self, cx, budget, record):
        self.cx = cx
        self.budget = budget
        self.stats = Stats(peak_cells=cx.cell_count)
        self.record = record
        self.log = []

    def _tick(self, op, args):
        cells = self.cx.cell_count
        if cells > self.stats.peak_cells:
            self.stats.peak_cells = cells
        if self.record:
            self.log.append({"op": op, "args": list(args), "cells_after": cells})
        if self.stats.operations > self.budget.max_operations or cells > self.budget.max_cells:
            raise _OverBudget

    def settle(self):
        """Exhaust folds and cube identifications; returns vertices touched on the way."""
        cx = self.cx
        touched = set()
        while cx.touched_vertices or cx.touched_cubes:
            if cx.touched_vertices:
                v = min(cx.touched_vertices)
                if v not in cx.verts:
                    cx.touched_vertices.discard(v)
                    continue
                pair = cx.fold_at(v)
                if pair is None:
                    cx.touched_vertices.discard(v)
                    touched.add(v)
                    continue
                cx.fold(*pair)
                self.stats.folds += 1
                self._tick("fold", pair)
                continue
            cid = min(cx.touched_cubes)
            cx.touched_cubes.discard(cid)
            if cid not in cx.cubes:
                continue
            cube = cx.cubes[cid]
            key = cube.canonical()
            other = cx.keys.get(key)
            if other is None or other == cid or other not in cx.cubes:
                cube.key = key
                cx.keys[key] = cid
                continue
            keep = cx.identify_cubes(cid, other)
            cx.cubes[keep].key = key
            cx.keys[key] = keep
            touched.update(cx.cubes[keep].corners)
            self.stats.identifications += 1
            self._tick("identify", (min(cid, other), max(cid, other)))
        return {v for v in touched if v in cx.verts}

    def attach(self, v, edge_ids):
        cid = self.cx.attach_cube(v, edge_ids)
        self.stats.attachments += 1
        self._tick("attach", [v] + sorted(edge_ids))
        return cid


def _prepare(cx):
    """Mark every cell as needing inspection (inputs may be hand built)."""
    cx.touched_vertices.update(cx.verts)
    cx.keys.clear()
    for cid, cube in cx.cubes.items():
        cube.key = None
        cx.touched_cubes.add(cid)


def standard_complete(x, budget=None, record_trace=False, trace_path=None):
    """Standard completion of a finite connected complex (input left untouched).

    Each stage folds and identifies until nothing applies, then attaches a
    cube for every maximal unspanned clique tuple at every vertex.
    """
    budget = budget or Budget.from_env()
    cx = x.copy()
    _prepare(cx)
    run = _Runner(cx, budget, record_trace or trace_path is not None)
    status = FINISHED
    pending = set(cx.verts)
    try:
        while True:
            pending |= run.settle()
            pending = {v for v in pending if v in cx.verts}
            work = []
            for v in sorted(pending):
                for tup in cx.missing_at(v):
                    work.append((v, tup))
            pending = set()
            if not work:
                break
            run.stats.stages += 1
            for v, tup in work:
                # earlier attachments in this stage never remove these edges
                run.attach(v, tup)
            pending.update(cx.touched_vertices)
    except _OverBudget:
        status = BUDGET_EXCEEDED
    run.stats.peak_cells = max(run.stats.peak_cells, cx.cell_count)
    if trace_path is not None:
        write_trace(trace_path, run.log)
    return CompletionOutcome(status, cx, run.stats, run.log)


def write_trace(path, records):
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")


def resolve_generators(graph, gens):
    """Append ss for every generator s whose star is the whole vertex set."""
    out = [tuple(w) for w in gens]
    for s in dominating_vertices(graph):
        out.append((s, s))
    return out


def complete_subgroup(graph, gens, budget=None, resolved=False, record_trace=False, trace_path=None):
    gens = [tuple(w) for w in gens]
    if resolved:
        gens = resolve_generators(graph, gens)
    return standard_complete(CubeComplex.rose(graph, gens), budget, record_trace, trace_path)


def complete_with_graph_loops(omega, loops, budget=None):
    """Add graph-loops to a finite completion and complete, keeping it isometric.

    ``loops`` is a list of (vertex, label).  Cubes are attached one at a time,
    always for an unspanned tuple of the largest available size, folding in
    between.  The added loops are origin-marked (they belong to the input).
    Afterwards the original vertices and non-loop edges must be exactly what
    they were and every new edge must be a graph-loop.
    """
    budget = budget or UNLIMITED
    cx = omega.copy()
    orig_verts = set(cx.verts)
    orig_edges = set(cx.edges)
    sample = sorted(orig_verts)[:12]
    before = {u: cx.bfs(u)[0] for u in sample}
    for v, s in loops:
        if v not in cx.verts:
            raise ValueError(f"vertex {v} is not in the complex")
        if cx.edge_with_label(v, s) is not None:
            raise ValueError(f"vertex {v} already has an edge labeled {cx.graph.vertices[s]}")
        cx.add_edge(v, v, s, origin=True)
    _prepare(cx)
    run = _Runner(cx, budget, False)
    try:
        run.settle()
        while True:
            best = None
            for v in sorted(cx.verts):
                for tup in cx.missing_at(v):
                    if best is None or len(tup) > len(best[1]):
                        best = (v, tup)
            if best is None:
                break
            run.attach(*best)
            run.settle()
    except _OverBudget:
        raise RuntimeError("graph-loop completion exceeded its budget") from None
    assert cx.verts == orig_verts, "graph-loop completion changed the vertex set"
    assert orig_edges <= set(cx.edges), "graph-loop completion merged original edges"
    for e in set(cx.edges) - orig_edges:
        assert cx.is_loop(e), "graph-loop completion produced a non-loop edge"
    for u, dist in before.items():
        assert cx.bfs(u)[0] == dist, "graph-loop completion is not isometric"
    return cx


def is_tree(cx):
    nonloop = all(not cx.is_loop(e) for e in cx.edges)
    return nonloop and cx.is_connected() and len(cx.edges) == len(cx.verts) - 1


def tree_complete(tree, budget=None):
    """Standard completion of a labeled tree, with its structural guarantees checked."""
    if not is_tree(tree):
        raise ValueError("input is not a tree")
    n_edges = len(tree.edges)
    out = standard_complete(tree, budget or UNLIMITED)
    if not out.finished:
        raise RuntimeError("tree completion exceeded its budget")
    cx = out.complex
    assert all(not cx.is_loop(e) for e in cx.edges), "tree completion has a graph-loop"
    assert not cx.has_commuting_bigon(), "tree completion has a commuting bigon"
    assert cx.diameter() <= n_edges, "tree completion is too wide"
    for w in cx.cycle_basis_labels():
        assert not reduce(cx.graph, w), "tree completion has an essential loop"
    return cx
