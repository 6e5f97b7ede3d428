"""iLQR on a linear-quadratic problem converges in one Newton step.

We build a random controllable latent system, solve it with the iLQR solver and
compare against the stationary Riccati gain from scipy. On a linear model with
quadratic cost the local model is exact, so the first iteration lands on the
optimum and the second only confirms it.
"""
import numpy as np
import scipy.linalg

from pcc.control import LatentCost, LinearLatentModel, ilqr_solve
from pcc.numcore import RngStream

rng = np.random.default_rng(0)
A = np.eye(3) + 0.2 * rng.standard_normal((3, 3))
B = rng.standard_normal((3, 2))
z0 = rng.standard_normal(3)

res = ilqr_solve(LinearLatentModel(A, B), z0, LatentCost(np.zeros(3), kappa=50.0), 60, rng=RngStream(1))
P = scipy.linalg.solve_discrete_are(A, B, 50.0 * np.eye(3), np.eye(2))
K = np.linalg.solve(np.eye(2) + B.T @ P @ B, B.T @ P @ A)

print(f"iterations:            {res.iterations}")
print(f"cost per iteration:    {', '.join(f'{c:.6g}' for c in res.costs)}")
print(f"first action (iLQR):   {res.traj.u[0]}")
print(f"first action (-K z0):  {-K @ z0}")
print(f"max difference:        {np.max(np.abs(res.traj.u[0] + K @ z0)):.2e}")
