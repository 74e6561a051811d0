"""Two-layer QG turbulence on a doubly periodic square.

Spin up a 32x32 flow from small noise, then check that with forcing,
drag and hyperviscosity switched off the solver conserves energy and
enstrophy.  Run with ``python demos/01_spectral_qg.py``.
"""
import numpy as np

from qgdebias import spectral_qg as qg
from qgdebias.spectral_qg import GridSpec, QGParams

# %% a turbulent run
grid = GridSpec(32)
params = QGParams(kd2=16.0, U=0.2)
topo = None  # flat bottom
state = qg.random_initial_state(grid, np.random.default_rng(0), params, topo)
traj = qg.integrate(state, horizon=100.0, dt=0.01, sample_every=1.0, params=params, topo=topo)
print(f"{len(traj)} snapshots of shape {traj.psi.shape[1:]}, t = {traj.times[0]} .. {traj.times[-1]}")

th = qg.topography_hat(topo, grid)
for t in (0, 25, 50, 100):
    s = qg.state_from_psi(traj.psi[t], params, topo)
    e, z = qg.energy_enstrophy(s, params, th)
    print(f"t={t:5.1f}  energy {e:.3e}  enstrophy {z:.3e}")

# %% inviscid, unforced: both invariants should hold to round-off
still = QGParams(r=0.0, U=0.0, nu=0.0)
flat = np.zeros((32, 32))
s = qg.random_initial_state(grid, np.random.default_rng(1), still, None, amplitude=0.5)
e0, z0 = qg.energy_enstrophy(s, still, flat)
for _ in range(1000):
    s = qg.rk4_step(s, 1e-3, still, flat)
e1, z1 = qg.energy_enstrophy(s, still, flat)
print(f"relative drift after 1000 steps: energy {abs(e1 - e0) / e0:.1e}, enstrophy {abs(z1 - z0) / z0:.1e}")

# %% too large a step is refused up front rather than blowing up
try:
    qg.integrate(traj.final_state, 10.0, 1.0, 1.0, params, topo)
except qg.CFLError as err:
    print("CFLError:", err)
