"""Closed-form critical lengths for lambda >= 1.

For lambda > 1 the quadratic form of the fundamental-piece sine profile
has an explicit zero L0(lambda, sigma), increasing in the offset sigma up
to the uniform bound L0*.  For lambda = 1 the quadratic profile gives a
closed form once the amplitude s0 exceeds the threshold ~1.0213; below
it no critical length exists.  This script sweeps both families and
plots L0 against its parameters.
"""

import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import solstab as ss

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

# --- lambda > 1: L0 against sigma, bounded by the uniform value -----------
print("lambda > 1 fundamental pieces")
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4))
for lam in (1.5, 2.0, 3.0):
    s0 = ss.half_period(ss.make_curve(lam))
    sigmas = np.linspace(0.0, s0, 80)
    values = [ss.critical_length_gt1(lam, sig).value for sig in sigmas]
    uniform = ss.critical_length_gt1_uniform(lam).value
    ax1.plot(sigmas / s0, values, label=f"lambda = {lam}")
    ax1.axhline(uniform, ls=":", lw=0.8, color=ax1.lines[-1].get_color())
    print(
        f"  lambda={lam}: L0(sigma=0) = {values[0]:.4f}, "
        f"uniform bound L0* = {uniform:.4f}"
    )
ax1.set_xlabel("sigma / s0")
ax1.set_ylabel("L0")
ax1.set_title("lambda > 1: critical length vs offset")
ax1.legend()

# behaviour in lambda: L0 -> 0 as lambda grows, blows up towards 1
lams = np.linspace(1.05, 6.0, 120)
ax2.plot(lams, [ss.critical_length_gt1(lam, 0.0).value for lam in lams])
ax2.set_xlabel("lambda")
ax2.set_ylabel("L0(sigma = 0)")
ax2.set_title("decay of L0 as lambda grows")

fig.tight_layout()
fig.savefig(os.path.join(OUT, "critical_lengths_gt1.png"), dpi=150)
print(f"wrote {os.path.join(OUT, 'critical_lengths_gt1.png')}")

# --- lambda = 1: threshold and the non-monotone L0(s0) ---------------------
print("\nlambda = 1 symmetric pieces")
threshold = ss.find_root(ss.reduced_I_limit_eq1, 1.0, 1.05)
print(f"  amplitude threshold: {threshold:.6f}")
try:
    ss.critical_length_eq1(1.0)
except ss.BelowThresholdError as exc:
    print(f"  s0 = 1.0 -> {exc}")

s0s = np.linspace(threshold + 5e-3, 10.0, 300)
values = [ss.critical_length_eq1(s0).value for s0 in s0s]
imin = int(np.argmin(values))
print(
    f"  L0 diverges at the threshold, dips to {values[imin]:.4f} near "
    f"s0 = {s0s[imin]:.3f}, then grows like sqrt(s0)"
)
for s0 in (1.5, 2.0, 5.0):
    crit = ss.critical_length_eq1(s0)
    strong = ss.critical_length_eq1(s0, ss.StabilityMode.STRONG)
    print(f"  s0 = {s0}: L0 = {crit.value:.4f} (strong mode {strong.value:.4f})")

fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(s0s, values)
ax.axvline(threshold, ls=":", color="gray")
ax.set_xlabel("s0")
ax.set_ylabel("L0")
ax.set_title("lambda = 1: critical length vs amplitude")
fig.tight_layout()
fig.savefig(os.path.join(OUT, "critical_lengths_eq1.png"), dpi=150)
print(f"wrote {os.path.join(OUT, 'critical_lengths_eq1.png')}")

# sanity: the closed form changes sign exactly at L0
L0 = ss.critical_length_eq1(2.0).value
print(
    f"\nsign bracketing at s0 = 2: Q(0.99 L0) = {ss.q_closed_eq1(2.0, 0.99 * L0):+.4e}, "
    f"Q(1.01 L0) = {ss.q_closed_eq1(2.0, 1.01 * L0):+.4e}"
)
