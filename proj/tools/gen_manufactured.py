#!/usr/bin/env python3
"""Generate closed-form forcing terms for the manufactured-solution study.

The manufactured fields are steady sinusoidal profiles of density, velocity,
temperature and (for the full volume model) specific volume.  For each model
variant this script forms the exact conservative flux of every governing
equation, differentiates it symbolically, and emits the result as C++ so a
forced solver run should hold the profiles stationary up to discretization
error.  Sources are expressed in the conserved variables used by the solver.

Usage:  python3 tools/gen_manufactured.py
Writes: src/analysis/manufactured_sources.cpp
        include/bivel/analysis/manufactured_sources.hpp
"""

from __future__ import annotations

import pathlib

import sympy as sp

ROOT = pathlib.Path(__file__).resolve().parent.parent

x = sp.Symbol("x")

# Packed parameter block: keep this order in sync with pack_parameters() in
# src/analysis/manufactured.cpp.
PARAM_NAMES = [
    "L", "M", "R", "mu", "kappa_m", "kappa_h", "kappa_klim",
    "rho0", "u0", "T0",
    "rho_amp", "u_amp", "T_amp", "vb_amp",
    "rho_ph", "u_ph", "T_ph", "vb_ph",
]
P = {name: sp.Symbol(name, real=True) for name in PARAM_NAMES}

L = P["L"]
M = P["M"]
R = P["R"]
mu = P["mu"]
kappa_m = P["kappa_m"]
kappa_h = P["kappa_h"]
kappa_klim = P["kappa_klim"]

wave = 2 * sp.pi * x / L
rho = P["rho0"] * (1 + P["rho_amp"] * sp.sin(wave + P["rho_ph"]))
u = P["u0"] + P["u_amp"] * sp.sin(wave + P["u_ph"])
T = P["T0"] * (1 + P["T_amp"] * sp.sin(wave + P["T_ph"]))
vbar = (M / P["rho0"]) * (1 + P["vb_amp"] * sp.sin(wave + P["vb_ph"]))

c_v = sp.Rational(3, 2) * R
a_long = sp.Rational(4, 3) * mu  # longitudinal viscosity 2*mu - eta, eta = 2mu/3


def ddx(expr):
    return sp.diff(expr, x)


def mass_based_sources(kappa_volume, kappa_k):
    """Flux divergences for the variants whose volume tracks mass density."""
    e_in = c_v * T
    p = rho * R * T
    total_energy = rho * (u ** 2 / 2 + e_in)

    jv = kappa_volume * ddx(rho) / rho
    u_v = u + jv
    pi_um = -a_long * ddx(u)
    pi_jv = -a_long * ddx(jv)
    pi_v = pi_um + pi_jv

    f_density = rho * u - kappa_k * ddx(rho)
    f_momentum = rho * u ** 2 + p + pi_v - kappa_k * ddx(rho * u)
    f_energy = (total_energy * u + (p + pi_v) * u_v - kappa_h * ddx(T)
                - kappa_k * ddx(total_energy))
    return {
        "density": ddx(f_density),
        "momentum": ddx(f_momentum),
        "energy": ddx(f_energy),
    }


def full_volume_sources():
    """Flux divergences and volume forcing for the full volume model."""
    rho_a = rho                    # conserved mass density M * A_n
    number_density = rho / M
    rho_b = M / vbar               # volume-based density
    e_in = c_v * T
    p = rho_b * R * T

    jv = -kappa_m * ddx(vbar) / vbar
    u_v = u + jv
    pi_um = -a_long * ddx(u)
    pi_jv = -a_long * ddx(jv)
    pi_v = pi_um + pi_jv

    total_energy = rho_a * (u ** 2 / 2 + e_in - jv ** 2 / 2)
    stress_group = (rho_a / rho_b) * (p + pi_v) - rho_a * jv ** 2

    f_density = rho_a * u
    f_momentum = rho_a * u ** 2 + stress_group
    f_energy = (total_energy * u + stress_group * u_v
                - (rho_a / rho_b) * kappa_h * ddx(T))

    a_over_rho = number_density / rho_b
    stress_transport = -ddx(a_over_rho * pi_v * jv)
    drift_dilation = number_density * jv ** 2 * ddx(u)
    pi_jv_grad_jv = a_over_rho * pi_jv * ddx(jv)
    pi_um_grad_jv = a_over_rho * pi_um * ddx(jv)
    pressure_dilation = (p / M) * ddx(number_density * vbar * jv)
    pressure_drift = ddx((-number_density * p / rho_b
                          + number_density * jv ** 2) * jv)
    production = (M / (number_density * p)) * (
        stress_transport + drift_dilation + pi_jv_grad_jv
        + pi_um_grad_jv + pressure_dilation + pressure_drift)

    source_vbar = (u * ddx(vbar)
                   + ddx(number_density * vbar * jv) / number_density
                   - production)
    return {
        "density": ddx(f_density),
        "momentum": ddx(f_momentum),
        "energy": ddx(f_energy),
        "v_bar": source_vbar,
    }


def emit_function(name, expr):
    expr = sp.together(expr)
    replacements, (reduced,) = sp.cse(expr, order="canonical")
    used = reduced.free_symbols | {
        s for _, sub in replacements for s in sub.free_symbols}
    lines = [f"double {name}(double x, const double* c) {{"]
    for index, pname in enumerate(PARAM_NAMES):
        if P[pname] in used:
            lines.append(f"  const double {pname} = c[{index}];")
    if x not in used:
        lines.append("  (void)x;")
    for symbol, sub in replacements:
        lines.append(f"  const double {symbol} = {sp.ccode(sub)};")
    lines.append(f"  return {sp.ccode(reduced)};")
    lines.append("}")
    return "\n".join(lines)


def main():
    table = {
        "nsf_baseline": mass_based_sources(sp.Integer(0), sp.Integer(0)),
        "bivelocity_reduced": mass_based_sources(kappa_m, sp.Integer(0)),
        "klimontovich": mass_based_sources(sp.Integer(0), kappa_klim),
        "volume_full": full_volume_sources(),
    }

    functions = []
    declarations = []
    for variant, sources in table.items():
        for equation, expr in sources.items():
            name = f"manufactured_source_{variant}_{equation}"
            print(f"emitting {name} ...", flush=True)
            functions.append(emit_function(name, expr))
            declarations.append(f"double {name}(double x, const double* c);")

    cpp = ROOT / "src" / "analysis" / "manufactured_sources.cpp"
    cpp.parent.mkdir(parents=True, exist_ok=True)
    cpp.write_text(
        "/// @file manufactured_sources.cpp\n"
        "/// @brief Exact forcing terms for the manufactured-solution study.\n"
        "///\n"
        "/// Generated by tools/gen_manufactured.py — do not edit by hand.\n"
        "\n"
        "#include \"bivel/analysis/manufactured_sources.hpp\"\n"
        "\n"
        "#include <cmath>\n"
        "\n"
        "namespace bivel::analysis {\n"
        "\n" + "\n\n".join(functions) + "\n"
        "\n"
        "}  // namespace bivel::analysis\n")

    hpp = ROOT / "include" / "bivel" / "analysis" / "manufactured_sources.hpp"
    hpp.parent.mkdir(parents=True, exist_ok=True)
    decls = "\n".join(declarations)
    hpp.write_text(
        "/// @file manufactured_sources.hpp\n"
        "/// @brief Exact forcing terms for the manufactured-solution study.\n"
        "///\n"
        "/// Generated by tools/gen_manufactured.py — do not edit by hand.\n"
        "/// Each function evaluates the exact spatial flux divergence of one\n"
        "/// governing equation on the steady manufactured profiles; `c` is\n"
        "/// the packed parameter block built by pack_parameters() in\n"
        "/// src/analysis/manufactured.cpp.\n"
        "\n"
        "#pragma once\n"
        "\n"
        "namespace bivel::analysis {\n"
        "\n" + decls + "\n"
        "\n"
        "}  // namespace bivel::analysis\n")
    print(f"wrote {cpp}")
    print(f"wrote {hpp}")


if __name__ == "__main__":
    main()
