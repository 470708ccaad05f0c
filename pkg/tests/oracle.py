"""Independent symbolic reference implementation (sympy), used only by tests."""
import sympy as sp


def symbols(n):
    return sp.symbols(f"X0:{n}")


def to_expr(text, n):
    xs = symbols(n)
    return sp.expand(sp.sympify(text.replace("^", "**"), locals={f"X{i}": x for i, x in enumerate(xs)}))


class OraclePair:
    def __init__(self, delta_images, gamma_images):
        n = len(delta_images)
        self.n = n
        self.xs = symbols(n)
        self.d = [to_expr(t, n) for t in delta_images]
        self.g = [to_expr(t, n) for t in gamma_images]

    def _apply(self, imgs, e):
        return sp.expand(sum(sp.diff(e, x) * im for x, im in zip(self.xs, imgs)))

    def delta(self, e):
        return self._apply(self.d, e)

    def gamma(self, e):
        return self._apply(self.g, e)

    def gamma_binom(self, k, e):
        for j in range(k):
            e = self.gamma(e) - j * e
        return sp.expand(e / sp.factorial(k))

    def star(self, f, h):
        out, i, di = 0, 0, sp.expand(f)
        while di != 0:
            out += di * self.gamma_binom(i, h)
            di = self.delta(di)
            i += 1
        return sp.expand(out)

    def bracket(self, f, h):
        return sp.expand(self.delta(f) * self.gamma(h) - self.delta(h) * self.gamma(f))

    def epsilon(self, f):
        if sp.expand(f) == 0:
            return None
        i, e = -1, sp.expand(f)
        while e != 0:
            e = self.delta(e)
            i += 1
        return i


def same(poly, expr):
    """Compare a package Poly with a sympy expression."""
    return sp.expand(to_expr(str(poly), poly.nvars) - expr) == 0
