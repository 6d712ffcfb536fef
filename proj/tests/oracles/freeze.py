"""Independent reference values for the C++ test suite.

Evaluates every frozen quantity from first principles with mpmath at 50
digits. None of this shares code with the library. Run once and paste the
output into tests/frozen_values.hpp:

    python3 tests/oracles/freeze.py > tests/frozen_values.hpp
"""

from mpmath import mp, mpf, sqrt, exp, log, pi, findroot

mp.dps = 50

C = mpf(299792458)


def full_speeds(rs, a, r):
    big = r * r + a * a * (1 + rs / r)
    drag = rs * a / (r * sqrt(big))
    root = sqrt(rs * rs * a * a / (r * r * big) + 1 - rs / r)
    return drag + root, drag - root


def delay_full(rs, a, r, length):
    co, counter = full_speeds(rs, a, r)
    return length * (1 / abs(counter) - 1 / co)


def scan_visibility(rs, a, rr, sigma):
    r = rr * rs
    dt = delay_full(rs, a, r, 2 * pi * r)
    return exp(-(dt * sigma) ** 2), dt


def bisect(f, lo, hi, iters=400):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


values = {}

# Earth, r = 6.37e7 m, omega = 2e6 1/m, L = pi r
rs, a, r = mpf("0.009"), mpf("3.9"), mpf("6.37e7")
co, counter = full_speeds(rs, a, r)
values["kEarthCoFull"] = co
values["kEarthCounterFull"] = counter
values["kEarthPhaseFull"] = mpf("2e6") * delay_full(rs, a, r, pi * r)
values["kEarthPhaseWeak"] = 2 * mpf("2e6") * pi * r * rs * a / r**2 * (1 + rs / r)
values["kEarthDelayWeak"] = 2 * pi * r * rs * a / r**2
dt = values["kEarthPhaseFull"] / mpf("2e6")
values["kEarthOneMinusVisibility"] = 1 - exp(-(dt * mpf("3.5e3")) ** 2)

# Black hole scan, r_s = 30 km, a = r_s/4, sigma = 3.5e3 1/s
rs, a = mpf(30000), mpf(7500)
sig = mpf("3.5e3") / C
values["kBhHorizon"] = rs / 2 + sqrt((rs / 2) ** 2 - a * a)
vis2, dt2 = scan_visibility(rs, a, mpf(2), sig)
values["kBhVisibilityAt2"] = vis2
values["kBhPhaseAt2"] = mpf("2e6") * dt2
values["kBhVisibilityAt100"] = scan_visibility(rs, a, mpf(100), sig)[0]
values["kBhCrossoverHalf"] = bisect(lambda x: scan_visibility(rs, a, x, sig)[0] - mpf("0.5"), mpf("1.000000001"), mpf(1000))

# Turntable HOM sweep: L = 10 km, R = 0.2 m, sigma = 4000 pi
L, R, sig = mpf(10000), mpf("0.2"), 4000 * pi


def hom(om):
    v = om * R / C
    d = 4 * v * L / (1 - v * v)
    return (1 - exp(-(sig * d) ** 2 / 2)) / 2


values["kFig3HalfDepthOmega"] = bisect(lambda om: hom(om) - mpf("0.25"), mpf(0), mpf(10))
values["kFig3AtOmega1"] = hom(mpf(1))
v = 2 * pi * mpf("0.2") / C
values["kSagnacPhaseFig3"] = 2 * 4000 * pi * v * L / (1 - v * v)

# Equivalence velocities (m/s)


def v_metric(rs, a, r):
    k = rs * a / r**2
    return k / sqrt(1 - rs / r + k * k) * C


values["kEquivBh10"] = v_metric(mpf(30000), mpf(300), mpf(300000))
values["kEquivEarthSurface"] = v_metric(mpf("0.009"), mpf("3.9"), mpf("6.37e6"))
values["kEquivEarthSurfaceOmega"] = values["kEquivEarthSurface"] / mpf("6.37e6")
values["kEquivEarthMassBh"] = v_metric(mpf("0.009"), mpf("3.9"), mpf(100))
K = mpf("0.009") * mpf("3.9") / (mpf("6.37e7") * mpf("0.2"))
values["kEquivTimeshift"] = K / sqrt(1 + K * K) * C
values["kEquivTimeshiftOmega"] = values["kEquivTimeshift"] / mpf("0.2")

# Minimum velocity for visibility loss, R = 5 m


def vmin(r, s):
    return C / sqrt(4 * pi**2 * r**2 * s**2 + 1)


values["kVminLong"] = vmin(mpf(5), mpf("3.3e3"))
values["kVminShort"] = vmin(mpf(5), mpf("3.3e4"))
values["kGforceShort"] = values["kVminShort"] ** 2 / 5 / mpf("9.81")

# Coherence length for L' = 10 km, Omega = 2 pi, R = 0.2 m
values["kCoherenceLength"] = 4 * pi * L * 2 * pi * R / C

# Fused silica n(k) = A/k + B at k0 = 8e6
A, B, k0 = mpf(100000), mpf("1.44"), mpf(8000000)
values["kSilicaN"] = A / k0 + B
values["kSilicaDn"] = -A / k0**2
values["kSilicaD2n"] = 2 * A / k0**3


def omega_moving(k, v, up):
    return k * (1 - v * v) / (A / k + B - up * v)


h = mpf("1e-12")
for name, up in (("Co", 1), ("Counter", -1)):
    vv = mpf("4.1916900439033638e-9")
    f = lambda k: omega_moving(k, vv, up)
    values["kSilicaGroupVelocity" + name] = mp.diff(f, k0)
    values["kSilicaGvd" + name] = mp.diff(f, k0, 2)

# Dip-centre error with Omega = 2 pi, R = 0.2 m, dL = 1 cm, n = n(k0)
v = 2 * pi * mpf("0.2") / C
n = values["kSilicaN"]
values["kDipShiftSeconds"] = 2 * mpf("0.01") * n * v * v / (1 - v * v) / C

# HOM Gaussian at sigma dt = 1
values["kHomAtUnitWidth"] = (1 - exp(-mpf("0.5"))) / 2
# Down-converted coincidence at sigma dalpha L = 0.25
values["kDownconvertedQuarter"] = (1 - exp(-mpf("0.0625"))) / 2

print("#pragma once")
print()
print("// Reference values from tests/oracles/freeze.py (mpmath, 50 digits).")
print("// Regenerate rather than edit by hand.")
print()
print("namespace frozen {")
for k, x in values.items():
    print(f"inline constexpr double {k} = {mp.nstr(x, 17, min_fixed=0, max_fixed=0)};")
print("} // namespace frozen")
