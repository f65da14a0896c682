"""Closed forms checked against symbolic derivations."""
import numpy as np
import pytest
import sympy as sp

from spreadlab.geometry.projective_core import wedge
from spreadlab.geometry.spreads import d_of_r, profile_satz1, profile_satz2, regulus_line, build_spread

r, z, a, b = sp.symbols('r z a b', positive=True)


def test_distance_function_derivation():
    """Minimizing x^2 + z^2 along x^2 = r^2 + (z - b)^2 / a^2 gives r^2 + b^2 / (1 + a^2)"""
    squared = r ** 2 + (z - b) ** 2 / a ** 2 + z ** 2
    z_star = sp.solve(sp.diff(squared, z), z)[0]
    assert sp.simplify(z_star - b / (1 + a ** 2)) == 0
    assert sp.simplify(squared.subs(z, z_star) - (r ** 2 + b ** 2 / (1 + a ** 2))) == 0


@pytest.mark.parametrize('profile,a_expr,b_expr', [
    (profile_satz1(0.5, 1.0), r ** sp.Rational(-1, 2), r ** sp.Rational(1, 2)),
    (profile_satz2(1.0), 1 / r, -sp.log(r)),
])
def test_distance_function_values(profile, a_expr, b_expr):
    d_expr = sp.sqrt(r ** 2 + b_expr ** 2 / (1 + a_expr ** 2))
    for value in (sp.Rational(1, 10), 1, 7):
        assert d_of_r(profile, float(value)) == pytest.approx(float(d_expr.subs(r, value)), rel=1e-14)


def test_joins_satisfy_klein_relation():
    x = sp.symbols('x1:5')
    y = sp.symbols('y1:5')
    p = wedge(np.array(x, dtype=object), np.array(y, dtype=object))
    assert sp.expand(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]) == 0


def test_satz2_regulus_is_graph_line():
    """Points (e^-t, tau e^-t, t + d tau) sweep the regulus line at r = e^-t"""
    t, tau, d = sp.symbols('t tau d', positive=True)
    point = sp.Matrix([sp.exp(-t), tau * sp.exp(-t), t + d * tau])
    x, y, zz = point
    hyperboloid = x ** 2 + y ** 2 - (zz + sp.log(x)) ** 2 / (d / x) ** 2 - x ** 2
    assert sp.simplify(sp.expand_log(hyperboloid, force=True)) == 0

    S = build_spread(profile_satz2(2.0), 1)
    L = regulus_line(S, float(sp.exp(-sp.Rational(1, 2))), 0.0)
    direction = L.direction / L.direction[1]
    assert direction[2] == pytest.approx(2.0 * float(sp.exp(sp.Rational(1, 2))))
