"""Pure-NumPy reference kernels for the hot inner loops.

The propagated system is the block-Hamiltonian matrix ODE

    W'(t) = [[0, I], [-K(t), 0]] W(t),   W: 2n x 2n,

with K sampled on a uniform half-step grid: K_half[2k] are node values,
K_half[2k+1] are midpoint values, so one classical RK4 step of size h over
[t_k, t_{k+1}] uses samples 2k, 2k+1, 2k+2.  Bilinear control terms are
folded into K before calling (they only touch the lower-left block).
"""
import numpy as np

IMPL = "python"


def jacobi_rk4(K_half, h, W0, want_traj=False):
    """Integrate W' = [[0,I],[-K,0]] W across the whole sampled grid.

    K_half : (2N+1, n, n) array, nodes at even indices, midpoints at odd.
    W0     : (2n, 2n) initial matrix.
    Returns W(T) or, if want_traj, the (N+1, 2n, 2n) node trajectory.
    """
    K_half = np.asarray(K_half, dtype=float)
    n = K_half.shape[1]
    nsteps = (K_half.shape[0] - 1) // 2
    top = np.array(W0[:n, :], dtype=float)
    bot = np.array(W0[n:, :], dtype=float)
    if want_traj:
        traj = np.empty((nsteps + 1, 2 * n, 2 * n))
        traj[0, :n] = top
        traj[0, n:] = bot
    for k in range(nsteps):
        K0 = K_half[2 * k]
        Km = K_half[2 * k + 1]
        K1 = K_half[2 * k + 2]
        k1t = bot
        k1b = -K0 @ top
        k2t = bot + 0.5 * h * k1b
        k2b = -Km @ (top + 0.5 * h * k1t)
        k3t = bot + 0.5 * h * k2b
        k3b = -Km @ (top + 0.5 * h * k2t)
        k4t = bot + h * k3b
        k4b = -K1 @ (top + h * k3t)
        top = top + (h / 6.0) * (k1t + 2.0 * k2t + 2.0 * k3t + k4t)
        bot = bot + (h / 6.0) * (k1b + 2.0 * k2b + 2.0 * k3b + k4b)
        if want_traj:
            traj[k + 1, :n] = top
            traj[k + 1, n:] = bot
    if want_traj:
        return traj
    out = np.empty((2 * n, 2 * n))
    out[:n] = top
    out[n:] = bot
    return out
