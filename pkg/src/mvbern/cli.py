"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 validation or incompatibility error,
4 I/O error.
"""

import argparse
import json
import sys

from . import core, inference, io, sampling
from .bitlattice import format_subset, pattern_of_rank, subset_of_mask
from .errors import MBDError

EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_IO = 4


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _fmt(x):
    return f"{x:.4f}"


def _pattern(n, r):
    return "(" + ",".join(map(str, pattern_of_rank(n, r))) + ")"


class Output:
    """Collects a report as a JSON document or as human-readable lines."""

    def __init__(self, machine, stream):
        self.machine = machine
        self.stream = stream
        self.doc = {}
        self.lines = []

    def put(self, key, value):
        self.doc[key] = value

    def line(self, text=""):
        self.lines.append(text)

    def table(self, header, rows):
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) for i, h in enumerate(header)]
        self.line("  ".join(str(h).rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            self.line("  ".join(str(c).rjust(w) for c, w in zip(r, widths)))

    def flush(self):
        if self.machine:
            json.dump(self.doc, self.stream, indent=2)
            self.stream.write("\n")
        else:
            self.stream.write("\n".join(self.lines) + "\n")


# --------------------------------------------------------------------------
# reports


def _dependence_report(out, table, title):
    theta = core.theta_lattice(table)
    mus = core.mu_lattice(theta)
    n = table.n
    out.put("n", n)
    out.put("names", list(table.names))
    out.put("p", [{"pattern": list(pattern_of_rank(n, r)), "value": float(v)} for r, v in enumerate(table.p, 1)])
    out.put("theta", [{"subset": list(subset_of_mask(n, m)), "value": v} for m, v in theta.rows()])
    out.put("mu", [{"subset": list(subset_of_mask(n, m)), "value": v} for m, v in mus.rows()])
    out.line(f"{title} (n={n}; variables: {', '.join(table.names)})")
    out.line()
    out.table(["pattern", "p"], [(_pattern(n, r), _fmt(v)) for r, v in enumerate(table.p, 1)])
    out.line()
    mu_of = dict(mus.rows())
    out.table(
        ["subset", "theta", "mu"],
        [(format_subset(n, m), _fmt(v), _fmt(mu_of[m]) if m in mu_of else "") for m, v in theta.rows()],
    )


def _estimate_rows(rows):
    return [{"label": r.name, "lower": r.lower, "median": r.median, "upper": r.upper} for r in rows]


def cmd_dep(args, out):
    out.put("command", "dep")
    _dependence_report(out, io.load_model(args.model), "Dependence parameters and measures")


def cmd_margin(args, out):
    table = io.load_model(args.model)
    out.put("command", "margin")
    out.put("keep", args.keep)
    _dependence_report(out, core.marginalize(table, args.keep), f"Marginal distribution of variables {args.keep}")


def cmd_cond(args, out):
    table = io.load_model(args.model)
    cond = core.condition(table, args.targets, args.given, args.values)
    out.put("command", "cond")
    out.put("given", args.given)
    out.put("values", args.values)
    given = ", ".join(f"{table.names[g - 1]}={v}" for g, v in zip(sorted(args.given), args.values))
    _dependence_report(out, cond, f"Conditional distribution given {given}")


def cmd_sim(args, out):
    table = io.load_model(args.model)
    sample = sampling.simulate(table, args.m, sampling.SeedSpec(args.seed, args.stream))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            io.write_csv(sample, fh)
        out.put("command", "sim")
        out.put("m", sample.m)
        out.put("path", args.out)
        out.line(f"wrote {sample.m} rows x {sample.n} columns to {args.out}")
    else:
        io.write_csv(sample, out.stream)
        out.lines = None


def _load_data(args):
    data = io.ingest_csv(args.data)
    if args.columns:
        data = data.select(args.columns)
    return data


def cmd_fit(args, out):
    data = _load_data(args)
    est = inference.fit(data, args.prior)
    out.put("command", "fit")
    out.put("m", data.m)
    out.put("prior", args.prior)
    n = data.n
    if args.top:
        top = inference.top_measures(est.mu, include=args.include, k=args.top)
        out.put("n", n)
        out.put("names", list(data.names))
        out.put("top_mu", [{"subset": list(subset_of_mask(n, m)), "value": v} for m, v in top])
        scope = f" containing variable {args.include}" if args.include else ""
        out.line(f"Largest {len(top)} dependence measures{scope} (m={data.m}, n={n})")
        out.table(["subset", "mu"], [(format_subset(n, m), _fmt(v)) for m, v in top])
        return
    _dependence_report(out, est.table, f"Posterior-mean estimates (m={data.m}, prior={args.prior})")


def cmd_infer(args, out):
    data = _load_data(args)
    rep = inference.infer(data, args.prior, args.nsim, args.probint, sampling.SeedSpec(args.seed))
    tail = (1 - args.probint) / 2
    out.put("command", "infer")
    out.put("names", list(data.names))
    out.put("m", data.m)
    out.put("probint", args.probint)
    out.put("nsim", args.nsim)
    out.put("probs", _estimate_rows(rep.probs))
    out.put("dparam", _estimate_rows(rep.dparam))
    out.put("dmeas", _estimate_rows(rep.dmeas))
    out.line(
        f"Posterior estimates (m={data.m}, prior={args.prior}, nsim={args.nsim}, "
        f"{100 * args.probint:g}% intervals; variables: {', '.join(data.names)})"
    )
    header = ["", f"q{tail:.4g}", "median", f"q{1 - tail:.4g}"]
    for title, rows in (("probabilities", rep.probs), ("theta", rep.dparam), ("mu", rep.dmeas)):
        out.line()
        out.line(title)
        out.table(header, [(r.name, _fmt(r.lower), _fmt(r.median), _fmt(r.upper)) for r in rows])


def cmd_bounds(args, out):
    out.put("command", "bounds")
    if args.grid:
        rows = []
        steps = int(round(1 / args.grid))
        for i in range(1, steps):
            t = i * args.grid
            try:
                b = core.theta123_admissible_interval(t, t, t, t * t, t * t, t * t)
            except MBDError:
                continue
            rows.append((t, b.lower, b.upper))
        out.put("pairwise_independent_region", [{"theta": t, "lower": lo, "upper": hi} for t, lo, hi in rows])
        out.line("Admissible theta123 for identical margins theta with pairwise independence")
        out.table(["theta", "lower", "upper"], [(f"{t:.4g}", _fmt(lo), _fmt(hi)) for t, lo, hi in rows])
        return
    if args.theta12 is not None:
        if not args.theta:
            raise MBDError("--theta12 needs --theta with two marginal parameters")
        inside = core.bivariate_admissible_region_contains(args.theta12, *args.theta)
        vertices = core.bivariate_region_vertices(args.theta12)
        out.put("theta12", args.theta12)
        out.put("point", args.theta)
        out.put("admissible", inside)
        out.put("region_vertices", [list(v) for v in vertices])
        out.line(f"({args.theta[0]:g}, {args.theta[1]:g}) {'is' if inside else 'is not'} compatible with theta12 = {args.theta12:g}")
        out.line("region vertices: " + ", ".join(f"({a:g}, {b:g})" for a, b in vertices))
        return
    theta = args.theta
    if not theta:
        raise MBDError("bounds needs --theta, --theta12 or --grid")
    if args.pairwise:
        if len(theta) != 3 or len(args.pairwise) != 3:
            raise MBDError("--pairwise needs three marginal and three pairwise values")
        b = core.theta123_admissible_interval(*theta, *args.pairwise)
        label = "theta123"
    elif len(theta) == 2:
        b = core.bivariate_admissible_interval(*theta)
        label = "theta12"
    else:
        b = core.frechet_bounds(theta, range(1, len(theta) + 1))
        label = "theta" + "".join(str(k) for k in range(1, len(theta) + 1))
    out.put("parameter", label)
    out.put("lower", b.lower)
    out.put("upper", b.upper)
    out.line(f"{label} admissible interval: {b}")


def cmd_build(args, out):
    doc = json.loads(io.resolve(args.spec).read_text())
    if not isinstance(doc, dict) or "layers" not in doc or "n" not in doc:
        raise MBDError("build expects a layered specification with 'n' and 'layers'")
    table, theta = core.build_layered(doc["n"], doc["layers"], names=doc.get("names"))
    out.put("command", "build")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(io.model_document(table), fh, indent=2)
    _dependence_report(out, table, "Layered specification is valid")


def cmd_coverage(args, out):
    truth = io.load_model(args.model)
    res = inference.coverage_study(
        truth, args.m, args.reps, args.probint, args.nsim, sampling.SeedSpec(args.seed), args.prior
    )
    out.put("command", "coverage")
    out.put("reps", args.reps)
    out.put("m", args.m)
    out.put("probint", args.probint)
    out.put("coverage", res.all_rates())
    out.line(f"Coverage of {100 * args.probint:g}% intervals over {args.reps} replications (m={args.m})")
    out.table(["quantity", "coverage"], [(k, _fmt(v)) for k, v in res.all_rates().items()])


def cmd_accuracy(args, out):
    data = _load_data(args)
    model = io.load_model(args.model) if args.model else None
    results = inference.prediction_rules(
        data, args.target, args.given, model, args.nsim, sampling.SeedSpec(args.seed), args.prior
    )
    out.put("command", "accuracy")
    out.put("target", args.target)
    out.put("rules", [
        {"rule": r.rule, "description": r.description, "given": list(r.given),
         "accuracy": r.accuracy, "stderr": r.stderr, "expected": r.expected}
        for r in results
    ])
    out.line(f"Prediction accuracy for {data.names[args.target - 1]} ({args.nsim} repetitions, m={data.m})")
    out.table(
        ["rule", "condition", "accuracy", "expected"],
        [(r.rule, r.description, f"{100 * r.accuracy:.2f}%", f"{100 * r.expected:.2f}%") for r in results],
    )


# --------------------------------------------------------------------------


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["human", "machine"], default="human",
                     help="human tables (4 decimals) or a JSON document at full precision")

    parser = argparse.ArgumentParser(prog="mvbern", description="Multivariate Bernoulli dependence toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dep", parents=[fmt], help="dependence parameters and measures of a model")
    p.add_argument("model")
    p.set_defaults(func=cmd_dep)

    p = sub.add_parser("margin", parents=[fmt], help="marginal distribution of a subset of variables")
    p.add_argument("model")
    p.add_argument("--keep", type=_ints, required=True)
    p.set_defaults(func=cmd_margin)

    p = sub.add_parser("cond", parents=[fmt], help="conditional distribution")
    p.add_argument("model")
    p.add_argument("--targets", type=_ints, required=True)
    p.add_argument("--given", type=_ints, required=True)
    p.add_argument("--values", type=_ints, required=True)
    p.set_defaults(func=cmd_cond)

    p = sub.add_parser("sim", parents=[fmt], help="simulate a data file from a model")
    p.add_argument("model")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=1234)
    p.add_argument("--stream", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sim)

    data_args = argparse.ArgumentParser(add_help=False)
    data_args.add_argument("data")
    data_args.add_argument("--columns", type=_ints, help="1-based columns to keep, in order")
    data_args.add_argument("--prior", type=float, default=inference.DEFAULT_PRIOR)

    p = sub.add_parser("fit", parents=[fmt, data_args], help="posterior-mean point estimates")
    p.add_argument("--top", type=int, default=0, help="only report the largest TOP measures")
    p.add_argument("--include", type=int, help="with --top: only subsets containing this variable")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("infer", parents=[fmt, data_args], help="posterior point and interval estimates")
    p.add_argument("--nsim", type=int, default=inference.DEFAULT_NSIM)
    p.add_argument("--probint", type=float, default=inference.DEFAULT_PROBINT)
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("bounds", parents=[fmt], help="compatibility intervals and regions")
    p.add_argument("--theta", type=_floats, help="marginal parameters")
    p.add_argument("--pairwise", type=_floats, help="theta12,theta13,theta23")
    p.add_argument("--theta12", type=float, help="fixed bivariate parameter (region membership)")
    p.add_argument("--grid", type=float, help="tabulate the pairwise-independence region with this step")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("build", parents=[fmt], help="validate a layered specification")
    p.add_argument("spec")
    p.add_argument("--out", help="write the resulting full-table model file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("coverage", parents=[fmt], help="coverage study of posterior intervals")
    p.add_argument("model")
    p.add_argument("--m", type=int, default=3000)
    p.add_argument("--reps", type=int, default=500)
    p.add_argument("--probint", type=float, default=0.99)
    p.add_argument("--nsim", type=int, default=inference.DEFAULT_NSIM)
    p.add_argument("--prior", type=float, default=inference.DEFAULT_PRIOR)
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("accuracy", parents=[fmt, data_args], help="accuracy of prediction rules")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--given", type=_ints, default=[])
    p.add_argument("--model", help="model file (default: posterior-mean fit of the data)")
    p.add_argument("--nsim", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1234)
    p.set_defaults(func=cmd_accuracy)
    return parser


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = Output(args.format == "machine", stdout)
    try:
        args.func(args, out)
    except MBDError as exc:
        print(f"mvbern {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"mvbern {args.command}: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"mvbern {args.command}: error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if out.lines is not None:
        out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
