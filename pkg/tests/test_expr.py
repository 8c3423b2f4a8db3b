import numpy as np
import pytest

from gn3flux.autodiff import Jet
from gn3flux.expr import (
    EvalDomainError,
    ExprSyntaxError,
    ISOTROPIC_IDENTIFIERS,
    UnknownIdentifierError,
    parse_coeff,
    pretty,
)


def ev(src, **env):
    return parse_coeff(src).eval(env)


def test_reciprocal_evaluates():
    fn = parse_coeff("1/(300 + da)")
    assert fn.eval({"da": 0.0}) == 1.0 / 300.0


def test_malformed_reports_byte_offset():
    with pytest.raises(ExprSyntaxError) as err:
        parse_coeff("s1 *")
    assert err.value.offset == 4


def test_axial_identifier_rejected_in_isotropic_context():
    with pytest.raises(UnknownIdentifierError):
        parse_coeff("s4 + 1", ISOTROPIC_IDENTIFIERS)
    # fine in the full context
    parse_coeff("s4 + 1")


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError):
        parse_coeff("bogus + 1")


def test_unknown_function():
    with pytest.raises(ExprSyntaxError):
        parse_coeff("tan(s1)")


def test_precedence_and_associativity():
    assert ev("2 + 3 * 4") == 14.0
    assert ev("2 * 3 ^ 2") == 18.0
    assert ev("2^3^2") == 512.0  # right-associative
    assert ev("-2^2") == -4.0  # power binds tighter than unary minus
    assert ev("2^-1") == 0.5
    assert ev("6 - 2 - 1") == 3.0
    assert ev("12 / 4 / 3") == 1.0


def test_functions():
    assert np.isclose(ev("exp(1)"), np.e)
    assert np.isclose(ev("ln(exp(2))"), 2.0)
    assert np.isclose(ev("sin(0) + cos(0)"), 1.0)
    assert ev("sqrt(9)") == 3.0


def test_scientific_literals():
    assert ev("1e-3 + 2.5E2") == 0.001 + 250.0


def test_empty_and_garbage():
    with pytest.raises(ExprSyntaxError):
        parse_coeff("   ")
    with pytest.raises(ExprSyntaxError):
        parse_coeff("1 + $")
    with pytest.raises(ExprSyntaxError):
        parse_coeff("(1 + 2")


def test_eval_domain_errors():
    with pytest.raises(EvalDomainError):
        ev("ln(0 - 1)")
    with pytest.raises(EvalDomainError):
        ev("1/(s1 - s1)", s1=2.0)
    with pytest.raises(EvalDomainError):
        ev("sqrt(0 - 4)")
    with pytest.raises(EvalDomainError):
        ev("exp(10000)")  # overflows to inf -> rejected


def test_missing_environment_entry():
    with pytest.raises(EvalDomainError):
        parse_coeff("s1 + 1").eval({})


@pytest.mark.parametrize(
    "src",
    [
        "1/(300 + da)",
        "-(1 + 0.1*s3^2)/(300.0 + da)",
        "exp(-da/600)/300",
        "s1^2 + 0.5*s3 + da",
        "-(2 + 0.2*sin(a))",
        "-0.25*s4/(300.0 + da) + 1.0*da",
        "sqrt(s1*s2) - ln(300 + da)",
        "2^-3 + (-da)^2",
        "-(a - da) * -(s1 + s2)",
    ],
)
def test_pretty_print_round_trip_is_fixed_point(src):
    fn = parse_coeff(src)
    once = fn.src
    again = parse_coeff(once)
    assert again.src == once
    assert again.tree == fn.tree


def test_canonical_form_fuzz():
    # random trees survive print -> parse -> print unchanged
    from gn3flux.expr import Bin, Call, Neg, Num, Var

    rng = np.random.default_rng(23)
    idents = ["a", "da", "s1", "s2", "s3"]
    fns = ["exp", "ln", "sin", "cos", "sqrt"]

    def gen(depth):
        roll = rng.integers(0, 6 if depth > 0 else 2)
        if roll == 0:
            return Num(float(np.round(rng.uniform(0.1, 9.9), 3)))
        if roll == 1:
            return Var(idents[rng.integers(0, len(idents))])
        if roll == 2:
            return Neg(gen(depth - 1))
        if roll == 3:
            return Call(fns[rng.integers(0, len(fns))], gen(depth - 1))
        op = "+-*/^"[rng.integers(0, 5)]
        return Bin(op, gen(depth - 1), gen(depth - 1))

    for _ in range(300):
        tree = gen(4)
        text = pretty(tree)
        assert parse_coeff(text).tree == tree


def test_jet_zero_perturbation_matches_plain_bitwise():
    rng = np.random.default_rng(29)
    sources = [
        "1/(300 + da)",
        "-(1 + 0.1*s3^2)/(300.0 + da)",
        "exp(-da/600)/300",
        "s1^2 + 0.5*s3 + da",
        "sqrt(s1*s2) + sin(a)*cos(da/100)",
    ]
    vals = {
        "a": rng.uniform(-1, 1, size=64),
        "da": rng.uniform(-50, 50, size=64),
        "s1": rng.uniform(0.1, 10, size=64),
        "s2": rng.uniform(0.1, 10, size=64),
    }
    vals["s3"] = vals["s1"] * vals["s2"] * rng.uniform(-0.9, 0.9, size=64)
    for src in sources:
        fn = parse_coeff(src)
        plain = fn.eval(vals)
        lifted = fn.eval({k: Jet(v, 0.0) for k, v in vals.items()})
        assert np.array_equal(np.asarray(plain), np.asarray(lifted.val))


def test_names_collected():
    assert parse_coeff("s1 + exp(da)*s3").names == frozenset({"s1", "da", "s3"})
