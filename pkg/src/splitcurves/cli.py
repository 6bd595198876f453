"""Command-line front end.

Subcommands: verify-example, analyze, pullback, split-type,
project-quartic, syzygetic.  Polynomials are written in the text grammar
(rational coefficients, + - * ^, parentheses, juxtaposition like 4xy);
node files are JSON arrays of coordinate lists or {"minpoly": ...,
"point": [...]} orbits.  Exit codes: 0 all checks pass, 1 a check
contradicts the claim, 2 an undetermined outcome, 64 usage errors, 65
malformed input data.
"""

import argparse
import json
import os
import sys

from .conics import classify_conic, contact_profile
from .cover import pullback_curve
from .curves import irreducibility_sextic, singular_locus_complete, verify_node
from .errors import CannotCertify, SplitCurvesError
from .forms import biform_to_str, form_to_str, parse_form
from .registry import example_ids, parse_node_spec
from .reports import jsonable, run_verify_example, zariski_triple_outcomes
from .quartics import QuarticSurface, project_quartic, syzygetic_test
from .splitting import splitting_type

PLANE_VARS = ("x", "y", "z")
SPACE_VARS = ("x", "y", "z", "w")

EX_USAGE = 64
EX_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        sys.exit(EX_USAGE)


def _read_expr(value):
    if os.path.exists(value):
        with open(value, "r", encoding="utf-8") as handle:
            return handle.read()
    return value


def _load_nodes(path, ambient=3):
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, list):
        raise ValueError("node file must hold a JSON array")
    return [parse_node_spec(spec, ambient) for spec in data]


def _emit(payload, as_json, text):
    if as_json:
        sys.stdout.write(json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _cmd_verify_example(args):
    if args.id == "zariski-triple":
        outcomes = zariski_triple_outcomes(height=args.height)
        distinct = len(set(outcomes.values())) == 3
        _emit(
            {"outcomes": outcomes, "pairwise_distinct": distinct},
            args.json,
            "zariski triple outcomes: %s\npairwise distinct: %s\n"
            % (outcomes, distinct),
        )
        return 0 if distinct else 1
    report = run_verify_example(
        args.id, height=args.height, shear_start=args.seed_shear
    )
    _emit(report.to_json_dict(), args.json, report.to_text())
    if report.undetermined:
        return 2
    return 0 if report.overall else 1


def _cmd_analyze(args):
    gamma = parse_form(_read_expr(args.curve), PLANE_VARS)
    conic = parse_form(_read_expr(args.conic), PLANE_VARS)
    payload = {
        "curve": form_to_str(gamma),
        "conic": form_to_str(conic),
        "conic_class": classify_conic(conic),
    }
    from .conics import find_rational_point, parametrize_conic
    from .errors import PointNotOnConic

    base = find_rational_point(conic, args.height)
    if base is None:
        raise PointNotOnConic(
            "no rational point of height <= %d on the conic" % args.height
        )
    profile = contact_profile(gamma, conic, parametrize_conic(conic, base))
    payload["contact"] = {
        "kind": profile.kind,
        "tangent_count": profile.tangent_count,
        "multiplicities": list(profile.multiplicities),
        "contact_form": str(profile.contact_form),
    }
    exit_code = 0
    if args.nodes:
        nodes = _load_nodes(args.nodes)
        payload["nodes"] = [jsonable(p) for p in nodes]
        reports = [verify_node(gamma, p) for p in nodes]
        payload["nodes_are_nodes"] = [r.is_node for r in reports]
        payload["singular_locus_complete"] = singular_locus_complete(
            gamma, nodes, shear_start=args.seed_shear
        )
        if gamma.degree == 6:
            try:
                payload["irreducible"] = irreducibility_sextic(gamma, nodes)
            except CannotCertify as exc:
                payload["irreducible"] = "not certified: %s" % exc
        split = splitting_type(
            gamma, conic, nodes, height=args.height,
            shear_start=args.seed_shear, verify_inputs=False,
        )
        payload["splitting"] = {
            "outcome": split.outcome,
            "type": [split.m, split.n] if split.outcome == "split" else None,
            "evidence": split.evidence,
        }
        if split.outcome == "undetermined":
            exit_code = 2
    text_lines = ["analysis of %s" % payload["curve"]]
    for key in sorted(payload):
        if key == "curve":
            continue
        text_lines.append("  %s: %s" % (key, jsonable(payload[key])))
    _emit(payload, args.json, "\n".join(text_lines) + "\n")
    return exit_code


def _cmd_pullback(args):
    gamma = parse_form(_read_expr(args.curve), PLANE_VARS)
    image = pullback_curve(gamma)
    payload = {
        "curve": form_to_str(gamma),
        "pullback": biform_to_str(image),
        "bidegree": list(image.bidegree),
    }
    _emit(
        payload,
        args.json,
        "pullback (bidegree %r): %s\n" % (image.bidegree, biform_to_str(image)),
    )
    return 0


def _cmd_split_type(args):
    gamma = parse_form(_read_expr(args.curve), PLANE_VARS)
    conic = parse_form(_read_expr(args.conic), PLANE_VARS)
    nodes = _load_nodes(args.nodes)
    report = splitting_type(
        gamma, conic, nodes, height=args.height, shear_start=args.seed_shear
    )
    payload = {
        "outcome": report.outcome,
        "type": [report.m, report.n] if report.outcome == "split" else None,
        "evidence": report.evidence,
        "notes": report.notes,
    }
    if report.certificate is not None:
        payload["certificate"] = {
            "c_n": form_to_str(report.certificate.c_n),
            "c_n1": form_to_str(report.certificate.c_n1),
            "line": form_to_str(report.certificate.line)
            if report.certificate.line is not None
            else None,
        }
    text = "splitting outcome: %s" % report.outcome
    if report.outcome == "split":
        text += " of type (%d,%d)" % (report.m, report.n)
    _emit(payload, args.json, text + "\n")
    return 2 if report.outcome == "undetermined" else 0


def _cmd_project_quartic(args):
    g2 = parse_form(_read_expr(args.g2), PLANE_VARS)
    g3 = parse_form(_read_expr(args.g3), PLANE_VARS)
    g4 = parse_form(_read_expr(args.g4), PLANE_VARS)
    surface = QuarticSurface(g2, g3, g4)
    gamma_x, delta_x, info = project_quartic(surface)
    payload = {
        "sextic": form_to_str(gamma_x),
        "contact_conic": form_to_str(delta_x),
    }
    if "reduced" in info:
        payload["reduced"] = info["reduced"]
    if "contact" in info:
        payload["contact_kind"] = info["contact"].kind
        payload["tangent_count"] = info["contact"].tangent_count
    _emit(
        payload,
        args.json,
        "sextic: %s\nconic:  %s\n%s"
        % (
            payload["sextic"],
            payload["contact_conic"],
            "".join(
                "%s: %s\n" % (k, payload[k])
                for k in ("reduced", "contact_kind", "tangent_count")
                if k in payload
            ),
        ),
    )
    return 0


def _cmd_syzygetic(args):
    surface = parse_form(_read_expr(args.surface), SPACE_VARS)
    nodes = _load_nodes(args.nodes, ambient=4)
    result = syzygetic_test(surface, nodes)
    payload = {"syzygetic": bool(result)}
    if result:
        payload["assigned_nodes"] = list(result.subset)
        payload["dimension"] = result.report.dimension
        payload["quadric_net"] = [form_to_str(k) for k in result.report.kernel]
    _emit(
        payload,
        args.json,
        "syzygetic: %s\n" % bool(result)
        + ("assigned nodes: %r\n" % (payload.get("assigned_nodes"),) if result else ""),
    )
    return 0


def build_parser():
    parser = _Parser(
        prog="splitcurves",
        description="Exact splitting-type certification for nodal plane "
        "curves with contact conics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--height", type=int, default=50,
            help="height bound for rational point searches (default 50)",
        )
        p.add_argument(
            "--seed-shear", type=int, default=0,
            help="starting index in the deterministic shear sequence",
        )

    p = sub.add_parser("verify-example", help="run a catalog example end to end")
    p.add_argument(
        "id",
        choices=list(example_ids()) + ["zariski-triple"],
        help="catalog example id",
    )
    common(p)
    p.set_defaults(func=_cmd_verify_example)

    p = sub.add_parser("analyze", help="contact analysis and optional splitting")
    p.add_argument("--curve", required=True, help="curve expression or file")
    p.add_argument("--conic", required=True, help="conic expression")
    p.add_argument("--nodes", help="JSON node file")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("pullback", help="pullback under the standard double cover")
    p.add_argument("--curve", required=True, help="curve expression or file")
    common(p)
    p.set_defaults(func=_cmd_pullback)

    p = sub.add_parser("split-type", help="decide the splitting type")
    p.add_argument("--curve", required=True)
    p.add_argument("--conic", required=True)
    p.add_argument("--nodes", required=True, help="JSON node file")
    common(p)
    p.set_defaults(func=_cmd_split_type)

    p = sub.add_parser(
        "project-quartic", help="project a node-centered quartic surface"
    )
    p.add_argument("--g2", required=True)
    p.add_argument("--g3", required=True)
    p.add_argument("--g4", required=True)
    common(p)
    p.set_defaults(func=_cmd_project_quartic)

    p = sub.add_parser("syzygetic", help="detect the syzygetic node configuration")
    p.add_argument("--surface", required=True, help="quartic in x, y, z, w")
    p.add_argument("--nodes", required=True, help="JSON node file (quadruples)")
    common(p)
    p.set_defaults(func=_cmd_syzygetic)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SplitCurvesError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EX_DATA
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EX_DATA


if __name__ == "__main__":
    sys.exit(main())
