"""Command-line front-end.

    weyldix [options] VERB ["EXPRESSION"]

Verbs: analyze, classify, centralizer, nstructure, ideals, verify, eigen,
eval.  Elements are written in X/Y/H syntax (see the parsing module for the
grammar).  Deep analysis requires a homogeneous element of A1; for
non-homogeneous input the tool prints the graded decomposition and refuses
with a diagnostic.

Exit codes: 0 success, 1 syntax error, 2 precondition violation,
3 inconclusive oracle (unsaturated box), 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .centralizer import (
    CENTRALIZER_POLYRING,
    CentralizerA1,
    canonical_generator,
    centralizer_A1,
    n_structure,
)
from .dixmier import (
    DixmierClass,
    classify,
    eigen_decompose,
    global_dimension_N,
    ideal_I,
    is_simple_N,
    n_gwa_presentation,
    problem5_report,
)
from .gwa import RING_A1, GradedElement, HomogeneousElement, membership
from .oracle import STANDARD_SUITE, Box
from .parsing import ParseError, RingMembershipError, element_to_json_dict, format_element, parse
from .verify import FAIL, INCONCLUSIVE, PASS, verify_element, worst_verdict

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_PRECONDITION = 2
EXIT_INCONCLUSIVE = 3
EXIT_MISMATCH = 4

CONFIG_ENV_VAR = "WEYL_DIXMIER_CONFIG"

DEFAULTS = {"box": (8, 12), "k": 4, "imax": 2, "suite": list(STANDARD_SUITE)}

VERBS = (
    "analyze",
    "classify",
    "centralizer",
    "nstructure",
    "ideals",
    "verify",
    "eigen",
    "eval",
)

_LATEX_CLASS = {
    DixmierClass.DELTA1: r"\Delta_1",
    DixmierClass.DELTA2: r"\Delta_2",
    DixmierClass.DELTA3: r"\Delta_3",
    DixmierClass.DELTA4: r"\Delta_4",
    DixmierClass.DELTA5: r"\Delta_5",
}


class PreconditionError(ValueError):
    pass


def load_config(path: str) -> dict:
    settings = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise PreconditionError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "box":
                settings["box"] = _parse_box(value)
            elif key in ("k", "imax"):
                settings[key] = int(value)
            elif key == "suite":
                settings["suite"] = value.split()
            else:
                raise PreconditionError(f"{path}:{lineno}: unknown key {key!r}")
    return settings


def _parse_box(text: str) -> tuple[int, int]:
    try:
        g, d = (int(part) for part in text.split(","))
    except ValueError:
        raise PreconditionError(f"box must be 'G,D', got {text!r}") from None
    return g, d


def resolve_settings(args) -> dict:
    settings = dict(DEFAULTS)
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    if config_path:
        settings.update(load_config(config_path))
    if args.box is not None:
        settings["box"] = _parse_box(args.box)
    if args.k is not None:
        settings["k"] = args.k
    if args.imax is not None:
        settings["imax"] = args.imax
    if args.suite is not None:
        with open(args.suite, encoding="utf-8") as handle:
            exprs = [line.strip() for line in handle if line.strip()]
        settings["suite"] = exprs
    return settings


def _require_homogeneous(e: GradedElement, text: str) -> HomogeneousElement:
    if e.is_zero:
        raise PreconditionError("the zero element has no analysis")
    if not membership(e, RING_A1):
        raise PreconditionError(
            f"element lies in {e.ring}; deep analysis needs an element of A1"
        )
    if not e.is_homogeneous:
        decomposition = ", ".join(
            f"grading {j}: {format_element(e.graded_component(j))}" for j, _ in e.terms()
        )
        raise PreconditionError(
            f"element is not homogeneous ({decomposition}); "
            "analysis covers homogeneous elements only"
        )
    u = HomogeneousElement.from_element(e)
    if u.is_scalar:
        raise PreconditionError(f"{text!r} is a scalar; scalars are not classified")
    return u


def _centralizer_json(u: HomogeneousElement) -> dict:
    desc = centralizer_A1(u)
    if desc == CENTRALIZER_POLYRING:
        return {"type": "K[H]"}
    assert isinstance(desc, CentralizerA1)
    cg = canonical_generator(u)
    return {
        "type": "laurent",
        "canonical_generator": {
            "beta_num": [str(c) for c in cg.beta.num.coeffs],
            "beta_den": [str(c) for c in cg.beta.den.coeffs],
            "t": cg.t,
            "s": cg.s,
            "m": cg.m,
        },
        "mu_list": list(desc.mu_list),
        "generators": [element_to_json_dict(g) for g in desc.generators],
    }


def _centralizer_text(u: HomogeneousElement) -> list[str]:
    desc = centralizer_A1(u)
    if desc == CENTRALIZER_POLYRING:
        return ["C(u,A1) = K[H]", "C(u,B)  = K(H)"]
    cg = canonical_generator(u)
    lines = [
        f"C(u,B)  = K[v,v^-1],  v = {format_element(cg.element())}   (s={cg.s}, m={cg.m})",
        "C(u,A1) = "
        + " + ".join("K[u]" if mu == 0 else f"K[u]*v^{mu}" for mu in desc.mu_list),
    ]
    for mu, gen in zip(desc.mu_list, desc.generators):
        if mu != 0:
            lines.append(f"  v^{mu} = {format_element(gen)}")
    return lines


def _has_ideal_shape(u: HomogeneousElement) -> bool:
    return u.n == 1 and u.degree >= 1


def _ideals_json(u: HomogeneousElement, k_max: int, imax: int) -> dict:
    report = problem5_report(u, imax)
    return {
        "ideals": [
            {"k": k, "exp": ideal_I(u, k).generator_exponent}
            for k in range(1, k_max + 1)
        ],
        "problem5": [
            {
                "i": row.i,
                "product_exponent": row.product_exponent,
                "ideal_exponent": row.ideal_exponent,
                "equal": row.equal,
            }
            for row in report.rows
        ],
    }


def _ideals_text(u: HomogeneousElement, k_max: int, imax: int) -> list[str]:
    exps = [ideal_I(u, k).generator_exponent for k in range(1, k_max + 1)]
    lines = ["I_k exponents (I_k = u^e K[u]):"]
    lines.append("  k: " + "  ".join(f"{k:2d}" for k in range(1, k_max + 1)))
    lines.append("  e: " + "  ".join(f"{e:2d}" for e in exps))
    report = problem5_report(u, imax)
    for row in report.rows:
        rel = "=" if row.equal else "!="
        k = row.i * (u.degree + 1)
        lines.append(
            f"I_1*I_{k - 1} = u^{row.product_exponent}*K[u] {rel} "
            f"I_{k} = u^{row.ideal_exponent}*K[u]"
        )
    lines.append(
        "Problem-5 chain fails at every level"
        if report.negative_answer
        else "Problem-5 chain did not separate (unexpected)"
    )
    return lines


def _analysis_json(u: HomogeneousElement, settings) -> dict:
    report = {
        "element": element_to_json_dict(u.element()),
        "class": str(classify(u)),
        "centralizer": _centralizer_json(u),
        "n_structure": n_structure(u).to_json_dict() if u.n != 0 else None,
        "ideals": None,
        "gwa": None,
        "simple": None,
        "gl_dim": None,
    }
    if _has_ideal_shape(u):
        report["ideals"] = _ideals_json(u, settings["k"], settings["imax"])["ideals"]
        report["gwa"] = n_gwa_presentation(u).to_json_dict()
        report["simple"] = is_simple_N(u)
        report["gl_dim"] = str(global_dimension_N(u))
    return report


def _analysis_text(u: HomogeneousElement, settings) -> list[str]:
    lines = [f"element: {format_element(u.element())}", f"class:   {classify(u)}"]
    lines.extend(_centralizer_text(u))
    if u.n != 0:
        ns = n_structure(u)
        lines.append(
            f"N-structure: gamma = {ns.gamma}, t = {ns.t}, m = {ns.m}, "
            f"mu_list = {list(ns.mu_list)}"
        )
        if ns.g_list:
            lines.append("  g: " + ", ".join(str(g) for g in ns.g_list))
            lines.append("  f: " + ", ".join(str(f) for f in ns.f_list))
    else:
        lines.append("N(u,A1) = K[H] = C(u,A1)")
    if _has_ideal_shape(u):
        lines.extend(_ideals_text(u, settings["k"], settings["imax"]))
        pres = n_gwa_presentation(u)
        lines.append(f"GWA presentation: a = {pres.a} (step sigma^{pres.step})")
        lines.append(f"simple: {is_simple_N(u)}   gl.dim: {global_dimension_N(u)}")
    return lines


def _eigen_json(u: HomogeneousElement) -> dict:
    report = eigen_decompose(u)
    return {
        "lattice": report.lattice,
        "step": str(report.step) if report.step is not None else None,
        "eigenvalues": report.eigenvalues_description(),
        "zero_eigenspace": "K[H]"
        if report.zero_eigenspace == CENTRALIZER_POLYRING
        else "C(u,A1)",
    }


def _verify_output(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            [
                {"element": label, "checks": [c.to_json_dict() for c in checks]}
                for label, checks in rows
            ],
            indent=2,
            sort_keys=True,
        )
    lines = []
    for label, checks in rows:
        lines.append(f"== {label}")
        for c in checks:
            sat = "saturated" if c.saturated else "UNSATURATED"
            lines.append(
                f"  {c.verdict.upper():12s} {c.claim:34s} closed: {c.closed_form:14s} "
                f"oracle: {c.oracle:14s} box {c.box} {sat}"
            )
    return "\n".join(lines)


def _run_verify(args, settings, fmt: str) -> int:
    box = Box(*settings["box"])
    expressions = [args.expression] if args.expression else settings["suite"]
    rows = []
    for text in expressions:
        u = _require_homogeneous(parse(text), text)
        rows.append((text, verify_element(u, text, box, settings["k"])))
    print(_verify_output(rows, fmt))
    overall = worst_verdict([c for _, checks in rows for c in checks])
    if overall == FAIL:
        return EXIT_MISMATCH
    if overall == INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _dispatch(args, settings) -> int:
    fmt = args.format
    verb = args.verb
    if verb == "verify":
        return _run_verify(args, settings, fmt)

    if not args.expression:
        raise PreconditionError(f"verb {verb!r} needs an element expression")
    element = parse(args.expression)

    if verb == "eval":
        style = {"text": "graded", "json": "json", "latex": "latex"}[fmt]
        print(format_element(element, style))
        return EXIT_OK

    u = _require_homogeneous(element, args.expression)

    if verb == "classify":
        cls = classify(u)
        if fmt == "json":
            print(json.dumps({"element": args.expression, "class": str(cls)}))
        elif fmt == "latex":
            print(_LATEX_CLASS[cls])
        else:
            print(cls)
        return EXIT_OK

    if verb == "centralizer":
        if fmt == "json":
            print(json.dumps(_centralizer_json(u), sort_keys=True))
        else:
            print("\n".join(_centralizer_text(u)))
        return EXIT_OK

    if verb == "nstructure":
        if u.n == 0:
            raise PreconditionError(
                "N-structure data needs a nonzero grading; "
                "here N(u,A1) = K[H] = C(u,A1)"
            )
        ns = n_structure(u)
        if fmt == "json":
            print(json.dumps(ns.to_json_dict(), sort_keys=True))
        else:
            print(
                f"gamma = {ns.gamma}\n t = {ns.t}, m = {ns.m}, "
                f"mu_list = {list(ns.mu_list)}, mu = {ns.mu}\n"
                f" g = {[str(g) for g in ns.g_list]}\n"
                f" f = {[str(f) for f in ns.f_list]}"
            )
        return EXIT_OK

    if verb == "ideals":
        if not _has_ideal_shape(u):
            raise PreconditionError(
                "the I_k closed form covers u = alpha(H)*X with deg alpha >= 1; "
                "use 'verify' (oracle path) for other elements"
            )
        if fmt == "json":
            print(json.dumps(_ideals_json(u, settings["k"], settings["imax"]), sort_keys=True))
        else:
            print("\n".join(_ideals_text(u, settings["k"], settings["imax"])))
        return EXIT_OK

    if verb == "eigen":
        if fmt == "json":
            print(json.dumps(_eigen_json(u), sort_keys=True))
        else:
            report = eigen_decompose(u)
            print(
                f"eigenvalues: {report.eigenvalues_description()}"
                + (
                    f"  (D(u, {report.step}*m) = K[H]*v_m)"
                    if report.lattice
                    else "  (eigenspace at 0 is C(u,A1))"
                )
            )
        return EXIT_OK

    if verb == "analyze":
        if fmt == "json":
            print(json.dumps(_analysis_json(u, settings), sort_keys=True))
        else:
            print("\n".join(_analysis_text(u, settings)))
        return EXIT_OK

    raise AssertionError(f"unhandled verb {verb!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="weyldix",
        description="Exact centralizer / nilpotent-filtration analysis in the "
        "first Weyl algebra, with a brute-force oracle.",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("expression", nargs="?", help="element in X/Y/H syntax")
    parser.add_argument("--format", choices=("text", "json", "latex"), default="text")
    parser.add_argument("--box", help="oracle box bounds 'G,D'")
    parser.add_argument("--k", type=int, help="max filtration level / ideal index")
    parser.add_argument("--imax", type=int, help="max i for Problem-5 rows")
    parser.add_argument("--suite", help="file with one element expression per line")
    parser.add_argument("--config", help=f"config file (or ${CONFIG_ENV_VAR})")
    args = parser.parse_args(argv)

    try:
        settings = resolve_settings(args)
        return _dispatch(args, settings)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (PreconditionError, RingMembershipError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
