#!/usr/bin/env python3
"""Brute-force reference numbers for the test suite.

Everything here is recomputed from scratch with plain term-by-term loops:
no imports from the package, and a private copy of the pinned particle
table and constants. If the library and this file ever disagree beyond
the stated tolerances, one of them picked up a bug or a silent data edit.

Run directly to print the full reference sheet:

    python tests/oracle.py
"""

import math
from fractions import Fraction

# Constants snapshot (CODATA 2018 / SI 2019 exact values).
HBAR_C_GEV_FM = 0.1973269804
PLANCK_MASS_GEV = 1.220890e19
ALPHA_INVERSE_MEASURED = 137.035999084
EPSILON0_SI = 8.8541878128e-12
E_CHARGE_SI = 1.602176634e-19

# SI-route inputs for the Planck-mass cross-check only.
HBAR_SI = 1.054571817e-34   # J s
C_SI = 299792458.0          # m/s (exact)
G_SI = 6.67430e-11          # m^3 kg^-1 s^-2

# Pinned charged-particle table (PDG 2022): name, charge numerator,
# charge denominator, mass in GeV, color multiplicity.
TABLE = [
    ("electron", -1, 1, 0.00051099895, 1),
    ("muon",     -1, 1, 0.1056583755,  1),
    ("tau",      -1, 1, 1.77686,       1),
    ("up",        2, 3, 0.00216,       3),
    ("down",     -1, 3, 0.00467,       3),
    ("strange",  -1, 3, 0.0934,        3),
    ("charm",     2, 3, 1.27,          3),
    ("bottom",   -1, 3, 4.18,          3),
    ("top",       2, 3, 172.69,        3),
    ("w_boson",   1, 1, 80.377,        1),
]


def planck_mass_from_si():
    """sqrt(hbar*c/G) converted to GeV, entirely via SI arithmetic."""
    mass_kg = math.sqrt(HBAR_SI * C_SI / G_SI)
    joules = mass_kg * C_SI * C_SI
    return joules / E_CHARGE_SI / 1e9


def weight(row):
    _, num, den, _, mult = row
    return Fraction(num, den) ** 2 * mult


def weight_sum(table=None):
    total = Fraction(0)
    for row in (TABLE if table is None else table):
        total += weight(row)
    return total


def log_term(mass_gev, cutoff_gev=PLANCK_MASS_GEV):
    return 2.0 * math.log(cutoff_gev / mass_gev)


def log_terms(cutoff_gev=PLANCK_MASS_GEV):
    return [(row[0], log_term(row[3], cutoff_gev)) for row in TABLE]


def fudge_factor(cutoff_gev=PLANCK_MASS_GEV, weighting="charge_squared"):
    num = 0.0
    den = 0.0
    for row in TABLE:
        term = log_term(row[3], cutoff_gev)
        if weighting == "charge_squared":
            w = float(weight(row))
        else:
            w = row[4]
        num += w * term
        den += w
    return num / den / (12.0 * math.pi ** 2)


def alpha_inverse_zero(cutoff_gev=PLANCK_MASS_GEV, table=None):
    total = 0.0
    for row in (TABLE if table is None else table):
        total += float(weight(row)) * log_term(row[3], cutoff_gev)
    return total / (3.0 * math.pi)


def alpha_inverse_running(k2_gev2, alpha0_inverse, mode="decouple"):
    total = 0.0
    included = Fraction(0)
    for row in TABLE:
        mass = row[3]
        if mode == "decouple" and not mass * mass < k2_gev2:
            continue
        total += float(weight(row)) * math.log(k2_gev2 / (mass * mass))
        included += weight(row)
    return alpha0_inverse - total / (3.0 * math.pi), included


def landau_log_mass(alpha0_inverse, table=None):
    rows = TABLE if table is None else table
    w_total = float(weight_sum(rows))
    mass_part = 0.0
    for row in rows:
        mass_part += float(weight(row)) * math.log(row[3])
    return 3.0 * math.pi * alpha0_inverse / (2.0 * w_total) + mass_part / w_total


def zeldovich_alpha_inverse(nu, mass_gev):
    return nu / (3.0 * math.pi) * 2.0 * math.log(PLANCK_MASS_GEV / mass_gev)


def zeldovich_species_count(alpha_inverse, mass_gev):
    return 3.0 * math.pi * alpha_inverse / (2.0 * math.log(PLANCK_MASS_GEV / mass_gev))


def epsilon0_model(f):
    hbar_c_joule_metre = HBAR_C_GEV_FM * 1e-15 * E_CHARGE_SI * 1e9
    w = float(weight_sum())
    return f * w * E_CHARGE_SI ** 2 / hbar_c_joule_metre


def sweep_grid(k2_min, k2_max, points):
    lo = math.log(k2_min)
    hi = math.log(k2_max)
    grid = [math.exp(lo + i * (hi - lo) / (points - 1)) for i in range(points)]
    grid[0] = k2_min
    grid[-1] = k2_max
    return grid


def main():
    print("== constants ==")
    print(f"planck_mass_gev (pinned)        = {PLANCK_MASS_GEV!r}")
    print(f"planck_mass_gev (SI route)      = {planck_mass_from_si()!r}")

    print("\n== particle table ==")
    print(f"rows                            = {len(TABLE)}")
    print(f"expanded entries                = {sum(r[4] for r in TABLE)}")
    print(f"weight sum W                    = {weight_sum()}")

    print("\n== log terms at Planck cutoff ==")
    terms = log_terms()
    for name, term in terms:
        print(f"{name:10s} {term!r}")
    values = [t for _, t in terms]
    lo, hi = min(values), max(values)
    print(f"min                             = {lo!r}")
    print(f"max                             = {hi!r}")
    print(f"spread (max-min)/max            = {(hi - lo) / hi!r}")

    print("\n== fudge factor at Planck cutoff ==")
    f_cs = fudge_factor()
    f_un = fudge_factor(weighting="uniform")
    print(f"f (charge_squared)              = {f_cs!r}")
    print(f"f (uniform)                     = {f_un!r}")

    print("\n== alpha_inverse ==")
    a0 = alpha_inverse_zero()
    print(f"alpha_inverse_zero (Planck)     = {a0!r}")
    print(f"4*pi*f*W check                  = {4.0 * math.pi * f_cs * float(weight_sum())!r}")
    a_mz, w_mz = alpha_inverse_running(91.19 ** 2, 137.036)
    print(f"alpha_inverse(91.19^2, decouple)= {a_mz!r}")
    print(f"included weight at 91.19^2      = {w_mz}")
    a_all, _ = alpha_inverse_running(91.19 ** 2, 137.036, mode="all")
    print(f"alpha_inverse(91.19^2, all)     = {a_all!r}")

    print("\n== Landau pole ==")
    ln_pole = landau_log_mass(137.036)
    print(f"ln(Lambda/GeV), SM, 137.036     = {ln_pole!r}")
    print(f"Lambda (GeV)                    = {math.exp(ln_pole)!r}")
    ln_e = 3.0 * math.pi * 137.036 / 2.0 + math.log(0.00051099895)
    print(f"ln(Lambda/GeV), electron only   = {ln_e!r}")

    print("\n== Zel'dovich formula ==")
    me = 0.00051099895
    print(f"alpha_inverse(nu=1, electron)   = {zeldovich_alpha_inverse(1, me)!r}")
    print(f"nu(137.036, electron)           = {zeldovich_species_count(137.036, me)!r}")
    print(f"nu(measured, electron)          = {zeldovich_species_count(ALPHA_INVERSE_MEASURED, me)!r}")

    print("\n== epsilon0 ==")
    print(f"epsilon0_model (f=0.7)          = {epsilon0_model(0.7)!r}")
    print(f"ratio to measured (f=0.7)       = {epsilon0_model(0.7) / EPSILON0_SI!r}")
    print(f"epsilon0_model (computed f)     = {epsilon0_model(f_cs)!r}")
    print(f"ratio to measured (computed f)  = {epsilon0_model(f_cs) / EPSILON0_SI!r}")


if __name__ == "__main__":
    main()
