"""Command-line entry point.  Exit codes: 0 decided, 2 unknown or exhausted, 1 error."""

import argparse
import json
import sys

from . import embedding, io, reflections, subgroups
from .completion import Budget, complete_subgroup
from .words import format_word, parse_word

EXIT_OK, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # usage errors are errors, not "unknown"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _parser():
    common = _Parser(add_help=False)
    common.add_argument("--graph", required=True, help="defining graph JSON file")
    common.add_argument("--gens", default="", help='comma-separated words, e.g. "c a, c b"')
    common.add_argument("--gens-file", help="JSON list of words or reflection objects, or one word per line")
    common.add_argument("--max-cells", type=int)
    common.add_argument("--max-ops", type=int)
    common.add_argument("--trace", help="write a JSONL operation log here")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")

    p = _Parser(prog="racgcomp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("complete", parents=[common]).add_argument("--resolved", action="store_true")
    for name in ("member", "power-member"):
        sub.add_parser(name, parents=[common]).add_argument("--word", required=True)
    for name in ("qc", "index", "torsion", "normal", "core"):
        sub.add_parser(name, parents=[common])
    sub.add_parser("separate", parents=[common]).add_argument("--word", required=True)
    r = sub.add_parser("reflect", parents=[common])
    r.add_argument("action", choices=["trim", "complete", "gens"])
    sub.add_parser("convert-involutions", parents=[common]).add_argument("--target", required=True)
    e = sub.add_parser("embed", parents=[common])
    e.add_argument("--target", required=True)
    e.add_argument("--caps-len", type=int, default=2)
    e.add_argument("--max-candidates", type=int, default=200_000)
    e.add_argument("--witness-out")
    x = sub.add_parser("export", parents=[common])
    x.add_argument("--resolved", action="store_true")
    return p


class _Job:
    def __init__(self, args):
        self.args = args
        self.graph = io.load_graph(args.graph)
        self.budget = Budget.from_env(args.max_cells, args.max_ops)

    def gens(self):
        a = self.args
        if a.gens_file:
            return io.load_words(self.graph, a.gens_file)
        return io.words_from_text(self.graph, a.gens)

    def word(self):
        return parse_word(self.graph, self.args.word)

    def fmt(self, w):
        return format_word(self.graph, w)

    def handle(self):
        return subgroups.subgroup(self.graph, self.gens(), self.budget, trace_path=self.args.trace)


def _unknown(h):
    return {"verdict": "unknown", "peak_cells": h.outcome.stats.peak_cells}, EXIT_UNKNOWN


def cmd_complete(job):
    out = complete_subgroup(job.graph, job.gens(), job.budget, resolved=job.args.resolved,
                            trace_path=job.args.trace)
    rep = {"verdict": "finished" if out.finished else "unknown", "stats": out.stats.as_dict()}
    rep.update(out.complex.summary())
    return rep, EXIT_OK if out.finished else EXIT_UNKNOWN


def cmd_member(job):
    h = job.handle()
    if not h.finished:
        return _unknown(h)
    return {"verdict": subgroups.membership(h, job.word())}, EXIT_OK


def cmd_power_member(job):
    h = job.handle()
    if not h.finished:
        return _unknown(h)
    return {"verdict": subgroups.power_membership(h, job.word())}, EXIT_OK


def cmd_qc(job):
    v = subgroups.quasiconvexity(job.handle())
    if isinstance(v, subgroups.Unknown):
        return {"verdict": "unknown", "peak_cells": v.peak_cells}, EXIT_UNKNOWN
    return {"verdict": "quasiconvex", "M": v.M}, EXIT_OK


def cmd_index(job):
    h = subgroups.SubgroupHandle(job.graph, job.gens(), None, 0)
    v = subgroups.index(h, job.budget)
    if isinstance(v, subgroups.Unknown):
        return {"verdict": "unknown", "peak_cells": v.peak_cells}, EXIT_UNKNOWN
    if isinstance(v, subgroups.Infinite):
        return {"verdict": "infinite"}, EXIT_OK
    return {"verdict": "finite", "n": v.n, "representatives": [job.fmt(w) for w in v.representatives]}, EXIT_OK


def cmd_torsion(job):
    h = job.handle()
    if not h.finished:
        return _unknown(h)
    return {"verdict": "torsion_free" if subgroups.is_torsion_free(h) else "torsion"}, EXIT_OK


def cmd_normal(job):
    h = job.handle()
    if not h.finished:
        return _unknown(h)
    r = subgroups.is_normal(h)
    return {"verdict": "normal" if r.verdict else "not_normal", "n1": r.n1_ok, "n2": r.n2_ok,
            "delta": job.graph.names(r.delta)}, EXIT_OK


def cmd_core(job):
    h = job.handle()
    if not h.finished:
        return _unknown(h)
    c = subgroups.core_graph(h)
    return {"verdict": "core", "root": c.root, "vertices": sorted(c.vertices),
            "edges": [[u, v, job.graph.vertices[s]] for _, (u, v, s) in sorted(c.edges.items())]}, EXIT_OK


def cmd_separate(job):
    sep = subgroups.separate(job.graph, job.word())
    return {"verdict": "separated", "index": sep.index,
            "generators": [job.fmt(w) for w in sep.handle.gens]}, EXIT_OK


def cmd_reflect(job):
    g = job.graph
    gens = job.gens()
    action = job.args.action
    if action == "trim":
        rs = reflections.trim(g, gens)
        return {"verdict": "trimmed", "reflections": rs.format(g)}, EXIT_OK
    if action == "complete":
        out = reflections.reflection_completion(g, gens)
        rep = {"verdict": "finished", "M": out.complex.eccentricity_from(out.complex.basepoint)}
        rep.update(out.complex.summary())
        return rep, EXIT_OK
    rs = reflections.trim(g, gens)
    d = reflections.standard_gens_graph(g, rs.reflections)
    return {"verdict": "graph", "graph": io.graph_to_dict(d), "reflections": rs.format(g)}, EXIT_OK


def cmd_convert_involutions(job):
    rel = io.load_graph(job.args.target)
    rs = reflections.involutions_to_reflections(job.graph, job.gens(), rel)
    return {"verdict": "reflections", "reflections": rs.format(job.graph)}, EXIT_OK


def cmd_embed(job):
    a = job.args
    target = io.load_graph(a.target)
    caps = embedding.SearchCaps(a.caps_len, a.max_candidates, job.budget)
    bound = embedding.candidate_space_bound(job.graph, len(target), a.caps_len)
    print(f"candidate sets at conjugator length <= {a.caps_len}: at most {bound}", file=sys.stderr)
    v = embedding.decide_embeddability(job.graph, target, caps)
    if isinstance(v, embedding.Yes):
        wit = io.reflections_to_json(job.graph, v.witness.reflections)
        if a.witness_out:
            with open(a.witness_out, "w") as fh:
                json.dump(wit, fh, indent=1)
        return {"verdict": "yes", "index": v.index, "case": v.case, "witness": wit}, EXIT_OK
    if isinstance(v, embedding.No):
        return {"verdict": "no", "case": v.case, "reason": v.reason}, EXIT_OK
    return {"verdict": "exhausted", "case": v.case, "stats": v.stats}, EXIT_UNKNOWN


def cmd_export(job):
    out = complete_subgroup(job.graph, job.gens(), job.budget, resolved=job.args.resolved,
                            trace_path=job.args.trace)
    fmt = job.args.format if job.args.format != "text" else "json"
    return io.export(out.complex, fmt).decode(), EXIT_OK if out.finished else EXIT_UNKNOWN


COMMANDS = {
    "complete": cmd_complete, "member": cmd_member, "power-member": cmd_power_member,
    "qc": cmd_qc, "index": cmd_index, "torsion": cmd_torsion, "normal": cmd_normal,
    "core": cmd_core, "separate": cmd_separate, "reflect": cmd_reflect,
    "convert-involutions": cmd_convert_involutions, "embed": cmd_embed, "export": cmd_export,
}


def render(report, fmt):
    if isinstance(report, str):
        return report
    if fmt == "text":
        return "".join(f"{k}: {v}\n" for k, v in report.items())
    return json.dumps(report) + "\n"


def run(argv=None):
    """Run one job; returns (exit code, rendered report or error message)."""
    return _run(_parser().parse_args(argv))


def _run(args):
    try:
        job = _Job(args)
        report, code = COMMANDS[args.command](job)
    except (ValueError, KeyError, OSError, AssertionError, json.JSONDecodeError) as exc:
        return EXIT_ERROR, json.dumps({"error": f"{type(exc).__name__}: {exc}"}) + "\n"
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return code, text


def main(argv=None):
    args = _parser().parse_args(argv)
    code, text = _run(args)
    if code == EXIT_ERROR:
        sys.stderr.write(text)
    elif not args.out:
        sys.stdout.write(text)
    return code

if __name__ == "__main__":
    sys.exit(main())
