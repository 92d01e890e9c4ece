"""Independent reference computations used only by the tests.

Nothing here calls into the library's homgeo or norms tensor code.
"""

import itertools

import numpy as np


def levi_civita(c, A):
    """Gamma[a, b] = nabla_{e_a} e_b for the left-invariant metric A (Koszul formula).

    2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
    """
    n = c.shape[0]
    # T[a, b, z] = <[e_a, e_b], e_z>
    T = np.einsum("abk,kz->abz", c, A)
    # rhs[x, y, z] = <nabla_x y, e_z>
    rhs = np.empty((n, n, n))
    for x, y, z in itertools.product(range(n), repeat=3):
        rhs[x, y, z] = 0.5 * (T[x, y, z] - T[y, z, x] + T[z, x, y])
    return rhs @ np.linalg.inv(A)


def nabla(c, A, x, y):
    return np.einsum("a,b,abk->k", x, y, levi_civita(c, A))


def riemann_tensor(c, A, x, y, z):
    """R(x, y) z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z."""
    br = np.einsum("i,j,ijk->k", x, y, c)
    return (
        nabla(c, A, x, nabla(c, A, y, z))
        - nabla(c, A, y, nabla(c, A, x, z))
        - nabla(c, A, br, z)
    )


def koszul_spray(c, A, y):
    return nabla(c, A, y, y)


def koszul_connection(c, A, y):
    """Matrix of v -> nabla_v y."""
    n = c.shape[0]
    return np.column_stack([nabla(c, A, np.eye(n)[j], y) for j in range(n)])


def koszul_riemann_operator(c, A, y):
    """Matrix of u -> R(u, y) y."""
    n = c.shape[0]
    return np.column_stack([riemann_tensor(c, A, np.eye(n)[j], y, y) for j in range(n)])


def sectional_curvature(c, A, x, y):
    num = riemann_tensor(c, A, x, y, y) @ A @ x
    den = (x @ A @ x) * (y @ A @ y) - (x @ A @ y) ** 2
    return num / den


def fd_hessian_half_sq(F, y, h):
    """Hessian of F^2/2 by the 5-point-per-axis mixed stencil."""
    n = len(y)
    f = lambda z: 0.5 * F(z) ** 2
    H = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            ei = np.zeros(n)
            ej = np.zeros(n)
            ei[i] = h
            ej[j] = h
            H[i, j] = (f(y + ei + ej) - f(y + ei - ej) - f(y - ei + ej) + f(y - ei - ej)) / (4 * h * h)
    return H


def fd_third_half_sq(F, y, u, v, w, h):
    """1/2 of the third directional derivative of F^2/2 along u, v, w."""
    f = lambda z: 0.5 * F(z) ** 2
    acc = 0.0
    for su, sv, sw in itertools.product((1, -1), repeat=3):
        acc += su * sv * sw * f(y + h * (su * u + sv * v + sw * w))
    return 0.5 * acc / (8 * h**3)


def alpha_beta_value(A, X, phi, y):
    """F(y) written out directly from alpha, beta and phi."""
    s = np.sqrt(y @ A @ y)
    return s * phi((A @ X) @ y / s)


def psi_bruteforce(c, A, X, u, v, y):
    """The polynomial Psi expanded with explicit loops."""
    n = len(y)

    def br(p, q):
        out = np.zeros(n)
        for i in range(n):
            for j in range(n):
                out += p[i] * q[j] * c[i, j]
        return out

    al = lambda p, q: sum(p[i] * A[i, j] * q[j] for i in range(n) for j in range(n))
    return al(y, br(y, u)) * (al(y, y) * al(X, v) - al(y, v) * al(X, y)) + al(y, br(v, y)) * (
        al(y, y) * al(X, u) - al(y, u) * al(X, y)
    )
