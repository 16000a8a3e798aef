#!/usr/bin/env python3
"""Generate the manufactured-solution source terms used by the `mms` preset.

The manufactured fields are steady:
    rho   = 2 + 0.1 sin(2 pi x) sin(2 pi y)
    u     = (0.1 sin(2 pi y), 0.1 sin(2 pi x))
    theta = 1 + 0.1 cos(2 pi x)
and the sources are what the continuous system leaves over when these are
plugged in:
    g_rho = div(rho u)
    g_m   = div(rho u (x) u) + grad p - div(2 mu D(u) + lambda div(u) I)
    g_E   = c_v div(rho theta u) - kappa lap(theta)
            - (2 mu |D(u)|^2 + lambda div(u)^2 - p div(u))
with p = rho theta.

Usage: python3 tools/mms_sources.py > src/mms_generated.inc
"""
import sympy as sp

x, y = sp.symbols("x y", real=True)
c_v, mu, lam, kappa = sp.symbols("c_v mu lambda kappa", positive=True)
tp = 2 * sp.pi

rho = 2 + sp.Rational(1, 10) * sp.sin(tp * x) * sp.sin(tp * y)
u = sp.Matrix([sp.Rational(1, 10) * sp.sin(tp * y), sp.Rational(1, 10) * sp.sin(tp * x)])
theta = 1 + sp.Rational(1, 10) * sp.cos(tp * x)
p = rho * theta
X = [x, y]


def div(v):
    return sum(sp.diff(v[i], X[i]) for i in range(2))


grad_u = sp.Matrix(2, 2, lambda i, j: sp.diff(u[i], X[j]))
D = (grad_u + grad_u.T) / 2
divu = div(u)
S = 2 * mu * D + lam * divu * sp.eye(2)

g_rho = div(rho * u)
g_m = [
    sum(sp.diff(rho * u[i] * u[j], X[j]) for j in range(2)) + sp.diff(p, X[i])
    - sum(sp.diff(S[i, j], X[j]) for j in range(2))
    for i in range(2)
]
DD = sum(D[i, j] ** 2 for i in range(2) for j in range(2))
g_E = (c_v * div(rho * theta * u) - kappa * (sp.diff(theta, x, 2) + sp.diff(theta, y, 2))
       - (2 * mu * DD + lam * divu ** 2 - p * divu))


def emit(name, expr):
    expr = sp.simplify(sp.expand(expr))
    code = sp.cxxcode(expr, standard="c++17")
    code = code.replace("M_PI", "kPi")
    return f"inline double {name}([[maybe_unused]] double x, [[maybe_unused]] double y, const GasParams& gas) {{\n" \
           f"    [[maybe_unused]] const double c_v = gas.c_v;\n" \
           f"    [[maybe_unused]] const double mu = gas.mu;\n" \
           f"    [[maybe_unused]] const double lambda = gas.lambda;\n" \
           f"    [[maybe_unused]] const double kappa = gas.kappa;\n" \
           f"    return {code};\n}}\n"


print("// Generated by tools/mms_sources.py; do not edit by hand.")
print("// NOLINTBEGIN")
for name, e in [("mms_rho", rho), ("mms_u0", u[0]), ("mms_u1", u[1]), ("mms_theta", theta),
                ("mms_source_mass", g_rho), ("mms_source_mom0", g_m[0]), ("mms_source_mom1", g_m[1]),
                ("mms_source_energy", g_E)]:
    print(emit(name, e))
print("// NOLINTEND")
