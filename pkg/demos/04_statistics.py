"""Statistical diagnostics on synthetic data with known answers."""
import numpy as np

from qgdebias import stats

rng = np.random.default_rng(4)

# %% histogram pdfs and divergences
a, b = rng.standard_normal(200_000), 1.0 + rng.standard_normal(200_000)
edges = stats.shared_edges(a, b)
p, q = stats.estimate_pdf(a, edges=edges), stats.estimate_pdf(b, edges=edges)
print(f"KL(p||q) = {stats.kl_divergence(p, q):.3f} (0.5 for unit-variance normals one apart)")
print(f"L1 of log pdfs = {stats.l1_logpdf(p, q):.3f}, pdf integral {p.integral():.6f}")

# %% Welch spectrum of an AR(1) series sampled every 0.5 time units
phi = 0.9
x = np.zeros((4096, 1))
for t in range(1, 4096):
    x[t] = phi * x[t - 1] + rng.standard_normal()
est = stats.psd(x, sample_every=0.5, nperseg=256)
print("PSD at low / high frequency:", est.power[1], est.power[-1])

# %% excursions of a smoothed energy above a threshold
gamma = stats.energy_gamma(x[:, 0], sample_every=0.5, window_time=5.0)
c = np.quantile(gamma, 0.9)
rep = stats.excursion_stats(gamma, c, sample_every=0.5)
print(f"{rep.count} excursions above {c:.2f}, mean duration {rep.mean:.1f} time units")

# %% lagged cross-correlation of a series with a delayed copy
z = rng.standard_normal(5000) + 1j * rng.standard_normal(5000)
r = stats.mode_cross_correlation(z[:-3], z[3:], lags=range(-5, 6))
print("b leads a by three samples; correlation peaks at lag", int(np.argmax(r)) - 5)
