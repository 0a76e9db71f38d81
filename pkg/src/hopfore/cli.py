"""Batch verification driver: a JSON job in, a deterministic JSON report out.

One command per invocation.  The configuration document carries the field,
group, character and cocycle data as exact scalar strings ("1/2",
"zeta^3", "t^2+1"), plus a command name and command parameters; reports
echo the configuration, add derived data (case tag, q, character order)
and the result payload.  Reports are byte-identical across runs: timing
goes to stderr only.

Exit codes: 0 computed/pass, 1 verified failure or negative result,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .fields import FieldError, gaussian_vanishing, \
    gaussian_vanishing_closed_form, make_field, q_binomial
from .groups import AbelianGroup, Character, Cocycle, GroupError, make_cocycle
from .hopf import (Case, HopfError, HopfOre, check_grading, check_hopf_axioms,
                   format_element, make_hopf_ore, validate_ore_compat)
from .modules import (BlockS, ModuleError, classify_simples,
                      decompose_tensor, is_indecomposable, is_isomorphic,
                      realize, validate_module)
from .structure import (IdealVariant, check_hopf_ideal, ideal_form,
                        ideal_form_char_p, make_quotient, rank_crosscheck,
                        rank_of, skew_primitives)
from .verma import (augmentation_submodule, skew_maximal_submodule, verma,
                    verma_quotient_mod_ideal)


class ConfigError(ValueError):
    """Schema violation, carrying a pointer to the offending key."""

    def __init__(self, path, message):
        self.path = path
        super().__init__("%s: %s" % (path, message))


# ---------------------------------------------------------------------------
# schema validation

_FIELD_KEYS = {"kind", "n", "p", "e"}
_TOP_KEYS = {"field", "group", "theta", "a", "alpha", "command", "params"}
_COMMANDS = {
    "qbinom": {"n", "m", "q"},
    "classify": {"degree", "group_sample", "targets"},
    "hopf_check": {"degree", "grading", "negative_control", "group_sample",
                   "threads"},
    "skew_primitives": {"target", "degree", "group_support"},
    "quotient": {"n", "beta", "degree", "negative_control", "char_p_linear"},
    "simples": {"quotient"},
    "tensor": {"sigma", "alpha", "lambda", "beta"},
    "verma": {"lambda", "quotient"},
}
_NEEDS_EXTENSION = {"classify", "hopf_check", "skew_primitives", "quotient",
                    "simples", "tensor", "verma"}


def _require(cond, path, message):
    if not cond:
        raise ConfigError(path, message)


def _check_keys(obj, allowed, path):
    _require(isinstance(obj, dict), path, "expected an object")
    for key in obj:
        if key not in allowed:
            raise ConfigError("%s.%s" % (path, key), "unknown key")


def _int_list(value, path):
    _require(isinstance(value, list) and all(isinstance(v, int) for v in value),
             path, "expected a list of integers")
    return value


def validate_config(doc):
    """Structural validation; raises ConfigError pointing at the bad key."""
    _check_keys(doc, _TOP_KEYS, "config")
    _require("command" in doc, "config.command", "missing")
    command = doc["command"]
    _require(command in _COMMANDS, "config.command",
             "unknown command %r" % (command,))
    _require("field" in doc, "config.field", "missing")
    _check_keys(doc["field"], _FIELD_KEYS, "config.field")
    kind = doc["field"].get("kind")
    _require(kind in ("rationals", "cyclotomic", "prime", "ext"),
             "config.field.kind", "must be rationals|cyclotomic|prime|ext")
    for key, needed in (("n", ("cyclotomic",)), ("p", ("prime", "ext")),
                        ("e", ("ext",))):
        if kind in needed:
            _require(isinstance(doc["field"].get(key), int),
                     "config.field.%s" % key, "required integer")
        else:
            _require(key not in doc["field"], "config.field.%s" % key,
                     "not allowed for kind %r" % kind)
    params = doc.get("params", {})
    _check_keys(params, _COMMANDS[command], "config.params")
    if command in _NEEDS_EXTENSION:
        for key in ("group", "theta", "a"):
            _require(key in doc, "config.%s" % key,
                     "required by command %r" % command)
        _check_keys(doc["group"], {"free_rank", "torsion"}, "config.group")
        _require(isinstance(doc["group"].get("free_rank", 0), int),
                 "config.group.free_rank", "expected an integer")
        _int_list(doc["group"].get("torsion", []), "config.group.torsion")
        _require(isinstance(doc["theta"], list), "config.theta",
                 "expected a list of scalar strings")
        _int_list(doc["a"], "config.a")
        if "alpha" in doc:
            _require(isinstance(doc["alpha"], list), "config.alpha",
                     "expected a list of scalar strings")
    return command, params


# ---------------------------------------------------------------------------
# building the algebra from a config

def _parse_scalar(field, text, path):
    _require(isinstance(text, str), path, "expected an exact scalar string")
    try:
        return field.parse(text)
    except FieldError as exc:
        raise ConfigError(path, str(exc))


def _scalar_list(field, values, path):
    return [_parse_scalar(field, v, "%s[%d]" % (path, i))
            for i, v in enumerate(values)]


def build_field(doc):
    spec = dict(doc["field"])
    kind = spec.pop("kind")
    try:
        return make_field(kind, **spec)
    except FieldError as exc:
        raise ConfigError("config.field", str(exc))


def build_extension(doc):
    field = build_field(doc)
    gspec = doc["group"]
    try:
        group = AbelianGroup(gspec.get("free_rank", 0),
                             gspec.get("torsion", []))
    except GroupError as exc:
        raise ConfigError("config.group", str(exc))
    try:
        theta = Character(field, group, _scalar_list(field, doc["theta"],
                                                     "config.theta"))
    except GroupError as exc:
        raise ConfigError("config.theta", str(exc))
    try:
        a = group.elem(doc["a"])
    except GroupError as exc:
        raise ConfigError("config.a", str(exc))
    alpha = None
    if "alpha" in doc:
        values = _scalar_list(field, doc["alpha"], "config.alpha")
        try:
            alpha = make_cocycle(theta, values)
        except GroupError as exc:
            raise ConfigError("config.alpha", str(exc))
    try:
        return make_hopf_ore(field, group, theta, a, alpha)
    except (HopfError, GroupError) as exc:
        raise ConfigError("config", str(exc))


def _corrupted_extension(doc):
    """Same data, with the first cocycle value bumped and validation skipped."""
    field = build_field(doc)
    gspec = doc["group"]
    group = AbelianGroup(gspec.get("free_rank", 0), gspec.get("torsion", []))
    theta = Character(field, group,
                      _scalar_list(field, doc["theta"], "config.theta"))
    a = group.elem(doc["a"])
    values = _scalar_list(field, doc.get("alpha", ["0"] * group.ngens),
                          "config.alpha")
    values[0] = values[0] + field.one
    bad = Cocycle(theta, values, validate=False)
    return HopfOre(field, group, theta, a, bad, validate=False)


def _group_sample(H, coords_list, path):
    if coords_list is None:
        return None
    return [H.group.elem(c) for c in
            (_int_list(c, "%s[%d]" % (path, i))
             for i, c in enumerate(coords_list))]


# ---------------------------------------------------------------------------
# serialization helpers

def fmt_scalar(x):
    return str(x)


def fmt_helem(u):
    return [[list(g.coords), i, fmt_scalar(c)] for (g, i), c in u.sorted_terms()]


def fmt_character(chi):
    return [fmt_scalar(im) for im in chi.images]


def fmt_matrix(mat):
    return [[fmt_scalar(x) for x in row] for row in mat]


def fmt_report_check(report):
    return {
        "ok": report.ok,
        "checked": report.checked,
        "failures": [{"what": what, "witness": witness}
                     for what, witness in report.failures],
    }


def _derived(H):
    return {
        "case": H.case.value,
        "q": fmt_scalar(H.q),
        "theta_order": H.theta.order(),
        "characteristic": H.field.characteristic(),
        "normalization": {
            "shift": None if H.normalization["shift"] is None
            else fmt_scalar(H.normalization["shift"]),
            "scale": None if H.normalization["scale"] is None
            else fmt_scalar(H.normalization["scale"]),
        },
    }


# ---------------------------------------------------------------------------
# commands

def cmd_qbinom(doc, params):
    field = build_field(doc)
    for key in ("n", "m", "q"):
        _require(key in params, "config.params.%s" % key, "missing")
    n, m = params["n"], params["m"]
    _require(isinstance(n, int) and isinstance(m, int) and 0 <= m <= n,
             "config.params.m", "need integers 0 <= m <= n")
    q = _parse_scalar(field, params["q"], "config.params.q")
    value = q_binomial(n, m, q)
    profile = None
    if n >= 2:
        profile = gaussian_vanishing(n, q)
        closed = gaussian_vanishing_closed_form(n, q)
    result = {
        "value": fmt_scalar(value),
        "vanishing_profile": profile,
        "vanishing_closed_form": None if n < 2 else closed,
    }
    status = "computed"
    if profile is not None and profile != closed:
        status = "fail"
    return {"derived": {"characteristic": field.characteristic()},
            "result": result, "status": status}


def cmd_classify(doc, params):
    H = build_extension(doc)
    degree = params.get("degree", 6)
    sample = _group_sample(H, params.get("group_sample"),
                           "config.params.group_sample")
    targets = _group_sample(H, params.get("targets"), "config.params.targets")
    rr = rank_of(H)
    cc = rank_crosscheck(H, degree, group_support=sample, targets=targets)
    result = {
        "rank": rr.rank.value,
        "branch": rr.branch,
        "h1_basis": rr.h1_basis_description(),
        "crosscheck_agrees": cc.agree,
        "observed_pattern": [[d, k] for d, k in cc.observed_pattern()],
        "per_target": [
            {"target": list(t.coords), "dimension": d,
             "predicted": [format_element(z) for z in pred], "ok": ok}
            for t, d, pred, ok in cc.per_target],
    }
    return {"derived": _derived(H), "result": result,
            "status": "pass" if cc.agree else "fail"}


def cmd_hopf_check(doc, params, threads=1):
    control = params.get("negative_control")
    _require(control in (None, "antipode_sign", "corrupt_cocycle"),
             "config.params.negative_control", "unknown control")
    H = _corrupted_extension(doc) if control == "corrupt_cocycle" \
        else build_extension(doc)
    degree = params.get("degree", 5)
    threads = params.get("threads", threads)
    sample = _group_sample(H, params.get("group_sample"),
                           "config.params.group_sample")
    grading_mode = params.get("grading", "auto")
    _require(grading_mode in ("auto", "require", "skip"),
             "config.params.grading", "must be auto|require|skip")

    compat = validate_ore_compat(H, group_sample=sample)
    antipode = None
    if control == "antipode_sign":
        x_image = H.mul(H.x(), H.g(H.a.inverse()))  # sign flipped on purpose

        def antipode(u):
            return H.antipode(u, x_image=x_image)

    axioms = check_hopf_axioms(H, degree_bound=degree, group_sample=sample,
                               antipode=antipode, threads=threads)
    checks = {"ore_compat": fmt_report_check(compat),
              "hopf_axioms": fmt_report_check(axioms)}
    ok = compat.ok and axioms.ok
    if grading_mode == "require" or (grading_mode == "auto"
                                     and H.case in (Case.ONE, Case.TWO)):
        grading = check_grading(H, degree, group_sample=sample)
        checks["grading"] = fmt_report_check(grading)
        ok = ok and grading.ok
    return {"derived": _derived(H), "result": {"checks": checks},
            "status": "pass" if ok else "fail"}


def cmd_skew_primitives(doc, params):
    H = build_extension(doc)
    _require("target" in params, "config.params.target", "missing")
    target = H.group.elem(_int_list(params["target"], "config.params.target"))
    degree = params.get("degree", 4)
    support = _group_sample(H, params.get("group_support"),
                            "config.params.group_support")
    basis = skew_primitives(H, target, degree, group_support=support)
    result = {
        "target": list(target.coords),
        "degree_bound": degree,
        "dimension": len(basis),
        "basis": [fmt_helem(z) for z in basis],
        "basis_pretty": [format_element(z) for z in basis],
    }
    return {"derived": _derived(H), "result": result, "status": "computed"}


def cmd_quotient(doc, params):
    H = build_extension(doc)
    control = params.get("negative_control")
    _require(control in (None, "nonhopf_ideal"),
             "config.params.negative_control", "unknown control")
    if "char_p_linear" in params:
        spec = params["char_p_linear"]
        _check_keys(spec, {"beta", "gamma"}, "config.params.char_p_linear")
        beta = _parse_scalar(H.field, spec.get("beta", "0"),
                             "config.params.char_p_linear.beta")
        gamma = _parse_scalar(H.field, spec.get("gamma", "0"),
                              "config.params.char_p_linear.gamma")
        try:
            form = ideal_form_char_p(H, beta, gamma)
        except HopfError as exc:
            raise ConfigError("config.params.char_p_linear", str(exc))
    else:
        _require("n" in params, "config.params.n", "missing")
        beta = _parse_scalar(H.field, params.get("beta", "0"),
                             "config.params.beta")
        try:
            form = ideal_form(H, params["n"], beta)
        except HopfError as exc:
            raise ConfigError("config.params", str(exc))
    quo = make_quotient(H, form)
    generators = None
    if control == "nonhopf_ideal":
        generators = [H.x(form.n) - H.one()]
    ideal_report = check_hopf_ideal(H, form, degree_bound=params.get("degree"),
                                    generators=generators)
    axioms = check_hopf_axioms(quo)
    result = {
        "ideal": repr(form),
        "variant": form.variant.value,
        "dimension": quo.dimension(),
        "effective_group": repr(quo.group),
        "hopf_ideal_check": fmt_report_check(ideal_report),
        "quotient_axioms": fmt_report_check(axioms),
    }
    ok = ideal_report.ok and axioms.ok
    return {"derived": _derived(H), "result": result,
            "status": "pass" if ok else "fail"}


def cmd_simples(doc, params):
    H = build_extension(doc)
    if H.theta.order() is None or not H.group.is_finite():
        cls = classify_simples(H)
        return {"derived": _derived(H),
                "result": {"kind": cls.kind, "notes": cls.notes},
                "status": "computed"}
    if "quotient" in params:
        parent = cmd_quotient_for(doc, H, params["quotient"],
                                  "config.params.quotient")
        form = parent.form
    else:
        # default: the canonical rank-one quotient with beta = 1
        n = H.theta.order()
        try:
            form = ideal_form(H, n, H.field.one)
        except HopfError:
            form = ideal_form(H)
        parent = H if form.variant is IdealVariant.ZERO \
            else make_quotient(H, form)
    cls = classify_simples(parent)
    mods = [realize(parent, s) for s in cls.specs()]
    noniso = all(
        is_isomorphic(mods[i], mods[j]).no
        for i in range(len(mods)) for j in range(i + 1, len(mods)))
    valid = all(validate_module(m).ok for m in mods)
    dims = [m.dim for m in mods]
    result = {
        "kind": cls.kind,
        "ideal": repr(form),
        "one_dimensional": [fmt_character(lam) for lam in (cls.one_dim or [])],
        "blocks": [{"sigma": fmt_character(b.lam), "beta": fmt_scalar(b.beta)}
                   for b in cls.blocks],
        "dimensions": dims,
        "pairwise_noniso": noniso,
        "all_validate": valid,
        "sum_of_squares": sum(d * d for d in dims),
        "algebra_dimension": parent.dimension()
        if not isinstance(parent, HopfOre) else None,
        "notes": cls.notes,
    }
    ok = noniso and valid
    return {"derived": _derived(H), "result": result,
            "status": "pass" if ok else "fail"}


def cmd_quotient_for(doc, H, spec, path):
    _check_keys(spec, {"n", "beta"}, path)
    _require("n" in spec, path + ".n", "missing")
    beta = _parse_scalar(H.field, spec.get("beta", "0"), path + ".beta")
    try:
        form = ideal_form(H, spec["n"], beta)
    except HopfError as exc:
        raise ConfigError(path, str(exc))
    return make_quotient(H, form)


def cmd_tensor(doc, params):
    H = build_extension(doc)
    for key in ("sigma", "lambda"):
        _require(key in params, "config.params.%s" % key, "missing")
    field = H.field
    sigma = Character(field, H.group,
                      _scalar_list(field, params["sigma"], "config.params.sigma"))
    lam = Character(field, H.group,
                    _scalar_list(field, params["lambda"], "config.params.lambda"))
    alpha = _parse_scalar(field, params.get("alpha", "0"), "config.params.alpha")
    beta = _parse_scalar(field, params.get("beta", "0"), "config.params.beta")
    try:
        dec = decompose_tensor(H, BlockS(sigma, alpha), BlockS(lam, beta))
    except ModuleError as exc:
        raise ConfigError("config.params", str(exc))
    s = H.theta.order()
    scalar = alpha * lam(H.a) ** s + beta
    result = {
        "summands": [{"character": fmt_character(sp.lam),
                      "beta": fmt_scalar(sp.beta)} for sp in dec.summands],
        "common_scalar": fmt_scalar(scalar),
        "splitting_verified": dec.verified,
        "basis_change": fmt_matrix(dec.basis_change),
    }
    return {"derived": _derived(H), "result": result,
            "status": "pass" if dec.verified else "fail"}


def cmd_verma(doc, params):
    H = build_extension(doc)
    _require("lambda" in params, "config.params.lambda", "missing")
    lam = Character(H.field, H.group,
                    _scalar_list(H.field, params["lambda"],
                                 "config.params.lambda"))
    V = verma(H, lam)
    result = {"lambda": fmt_character(lam)}
    s = V.chi.order()
    J = augmentation_submodule(V)
    result["J"] = {"canonical": repr(J), "maximal": J.is_maximal()}
    ok = J.is_maximal()
    if s is not None:
        Jb = skew_maximal_submodule(V, H.field.one)
        quotient_mod = Jb.quotient_module()
        block = realize(H, BlockS(lam, H.field.one))
        iso = is_isomorphic(quotient_mod, block)
        result["J_beta"] = {"beta": "1", "canonical": repr(Jb),
                            "maximal": Jb.is_maximal(),
                            "quotient_isomorphic_to_block": iso.answer}
        ok = ok and Jb.is_maximal() and iso.yes
    if "quotient" in params:
        quo = cmd_quotient_for(doc, H, params["quotient"],
                               "config.params.quotient")
        res = verma_quotient_mod_ideal(V, quo)
        entry = {"ideal": repr(quo.form), "kind": res.kind,
                 "detail": res.detail}
        if res.kind == "module":
            ind = is_indecomposable(res.module)
            entry["dimension"] = res.module.dim
            entry["indecomposable"] = ind.answer
            entry["validates"] = validate_module(res.module).ok
            ok = ok and ind.yes and entry["validates"]
        result["mod_ideal"] = entry
    return {"derived": _derived(H), "result": result,
            "status": "pass" if ok else "fail"}


_DISPATCH = {
    "qbinom": cmd_qbinom,
    "classify": cmd_classify,
    "hopf_check": cmd_hopf_check,
    "skew_primitives": cmd_skew_primitives,
    "quotient": cmd_quotient,
    "simples": cmd_simples,
    "tensor": cmd_tensor,
    "verma": cmd_verma,
}


def run_job(doc, threads=1):
    """Validate and execute one job; returns (report dict, exit code)."""
    command, params = validate_config(doc)
    handler = _DISPATCH[command]
    if command == "hopf_check":
        body = handler(doc, params, threads=threads)
    else:
        body = handler(doc, params)
    report = {"command": command, "config": doc}
    report.update(body)
    code = 0 if report["status"] in ("pass", "computed") else 1
    return report, code


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hopfore",
        description="Exact verification jobs for Hopf-Ore extensions of "
                    "abelian group algebras.")
    parser.add_argument("--config", required=True,
                        help="path to a JSON job document ('-' for stdin)")
    parser.add_argument("--command", default=None,
                        help="override the command in the document")
    parser.add_argument("--degree", type=int, default=None,
                        help="override params.degree")
    parser.add_argument("--output", default=None,
                        help="write the report to this path instead of stdout")
    parser.add_argument("--threads", type=int, default=1,
                        help="sub-check parallelism (results independent of N)")
    args = parser.parse_args(argv)

    try:
        if args.config == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.config) as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print("error: cannot read config: %s" % exc, file=sys.stderr)
        return 2

    if args.command is not None:
        doc["command"] = args.command
    if args.degree is not None:
        doc.setdefault("params", {})["degree"] = args.degree

    started = time.monotonic()
    try:
        report, code = run_job(doc, threads=args.threads)
    except ConfigError as exc:
        print("invalid input at %s" % exc, file=sys.stderr)
        return 2
    except (FieldError, GroupError, HopfError, ModuleError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return 2
    elapsed = time.monotonic() - started

    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print("command %s finished in %.3fs with status %s"
          % (report["command"], elapsed, report["status"]), file=sys.stderr)
    return code


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
