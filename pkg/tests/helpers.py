from inhabit.oracle import OracleExplosion, enumerate_inhabitants
from inhabit.syntax import App, Atom, Lam


def mutate(t, rng, names):
    """Small random edits of a normal term."""
    if isinstance(t, Lam):
        choice = rng.random()
        if choice < 0.3:
            return Lam(t.var, Atom("q") if t.ann == Atom("p") else Atom("p"), t.body)
        return Lam(t.var, t.ann, mutate(t.body, rng, names | {t.var}))
    choice = rng.random()
    if choice < 0.35:
        return App(rng.choice(sorted(names | {"free"})), t.args)
    if choice < 0.55:
        return App(t.head, t.args + (App(rng.choice(sorted(names | {"free"}))),))
    if choice < 0.7 and t.args:
        return App(t.head, t.args[:-1])
    if t.args:
        i = rng.randrange(len(t.args))
        args = list(t.args)
        args[i] = mutate(args[i], rng, names)
        return App(t.head, tuple(args))
    return App(t.head, (App(t.head),))


def oracle_terms(s, max_depth=3, cap=2000):
    """Oracle terms at the largest depth <= max_depth that stays under ``cap``."""
    for d in range(max_depth, 0, -1):
        try:
            return d, enumerate_inhabitants(s, d, cap=cap)
        except OracleExplosion:
            continue
    return 0, []
