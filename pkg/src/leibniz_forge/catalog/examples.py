"""Worked two-dimensional examples: a coalgebra with co-Yang-Baxter forms, and
Nijenhuis operators built from compatible (r, omega) pairs.

An entry carries a base structure (``algebra`` or ``coalgebra``), optional
shared ``r``/``omega``/``bracket`` data, and a list of ``cases``. A case adds
parameters and data on top of its entry. ``expect_failures`` lists the
hypotheses a negative control must fail, and nothing else may fail.

Where the printed data does not satisfy its own claims, ``printed_*`` keeps
the printed value and the unprefixed key holds the reconstruction.
"""

COALGEBRAS = {
    "q2": {
        "basis": ("e", "f"),
        "coproduct": {"e": [("1", "f", "e"), ("1", "f", "f")]},
    },
}

_OMEGA_3_11_II_PRINTED = [
    ("nu", "e", "e"),
    ("nu*(lambda + gamma)/gamma", "e", "f"),
    ("nu*(lambda + gamma)/gamma", "f", "e"),
    ("nu*(lambda + gamma)^2/gamma^2", "f", "f"),
]
_OMEGA_3_11_II = [
    ("nu", "e", "e"),
    ("-nu*(lambda + gamma)/gamma", "e", "f"),
    ("-nu*(lambda + gamma)/gamma", "f", "e"),
    ("nu*(lambda + gamma)^2/gamma^2", "f", "f"),
]

EXAMPLES = (
    {
        "id": "ex-3.2",
        "coalgebra": "q2",
        "cases": (
            {
                "label": "1",
                "parameters": ("lambda",),
                "omega": [("lambda", "e", "e"), ("-lambda", "e", "f")],
                "checks": ("cclybe",),
            },
            {
                "label": "2",
                "parameters": ("lambda", "gamma"),
                "omega": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e")],
                "checks": ("cclybe", "dual-triangular"),
            },
            {
                "label": "3",
                "parameters": ("lambda",),
                "omega": [("lambda", "e", "e"), ("-lambda", "e", "f"), ("-lambda", "f", "e"), ("lambda", "f", "f")],
                "checks": ("cclybe", "dual-triangular"),
            },
        ),
    },
    {
        "id": "ex-3.11/1",
        "algebra": "b",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e")],
        "coproduct": {"f": [("lambda + gamma", "e", "e"), ("gamma", "e", "f")]},
        "cases": (
            {
                "label": "i",
                "parameters": ("nu", "kappa"),
                "pipeline": "thm310",
                "printed_omega": [("nu", "e", "e"), ("kappa", "e", "f"), ("nu", "f", "e"), ("kappa", "f", "f")],
                "omega": [("nu", "e", "f"), ("nu", "f", "e"), ("kappa", "f", "f")],
                "operator": {"e": {"e": "gamma*nu"}, "f": {"e": "lambda*nu + gamma*kappa", "f": "gamma*nu"}},
                "erratum": (
                    "printed omega is not symmetric and fails the co-Yang-Baxter and symplectic conditions; "
                    "omega(e,e) = 0, omega(e,f) = omega(f,e) = nu, omega(f,f) = kappa is the symmetric form "
                    "that reproduces the printed operator"
                ),
            },
            {
                "label": "ii",
                "parameters": ("nu",),
                "invertible": ("lambda", "gamma", "nu"),
                "pipeline": "thm310",
                "printed_omega": _OMEGA_3_11_II_PRINTED,
                "omega": _OMEGA_3_11_II,
                "expect_failures": ("eq21",),
                "erratum": (
                    "printed off-diagonal entries fail the co-Yang-Baxter condition; with their sign "
                    "flipped the form solves it and only the symplectic condition fails"
                ),
            },
        ),
    },
    {
        "id": "ex-3.11/2",
        "algebra": "b",
        "parameters": ("lambda",),
        "r": [("lambda", "e", "e"), ("-lambda", "e", "f"), ("-lambda", "f", "e"), ("lambda", "f", "f")],
        "coproduct": {
            "e": [("lambda", "e", "f"), ("-lambda", "f", "e")],
            "f": [("lambda", "e", "f"), ("-lambda", "f", "e")],
        },
        "cases": (
            {
                "label": "general",
                "parameters": ("gamma", "nu", "kappa"),
                "relations": ("nu^2 = gamma*kappa",),
                "omega": [("gamma", "e", "e"), ("nu", "e", "f"), ("nu", "f", "e"), ("kappa", "f", "f")],
                "checks": ("cclybe", "dual-triangular"),
            },
            {
                "label": "symplectic",
                "parameters": ("kappa",),
                "constraints": ("gamma = 0", "nu = 0"),
                "pipeline": "thm310",
                "omega": [("kappa", "f", "f")],
                "operator": {"f": {"e": "-lambda*kappa", "f": "lambda*kappa"}},
            },
        ),
    },
    {
        "id": "ex-3.16/1",
        "coalgebra": "q2",
        "parameters": ("lambda", "gamma"),
        "omega": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e")],
        "bracket": {("e", "e"): {"f": "lambda + gamma"}, ("e", "f"): {"f": "gamma"}},
        "cases": (
            {
                "label": "i",
                "parameters": ("nu", "kappa"),
                "pipeline": "thm315",
                "r": [("nu", "e", "f"), ("nu", "f", "e"), ("kappa", "f", "f")],
                "operator": {"e": {"e": "gamma*nu", "f": "lambda*nu + gamma*kappa"}, "f": {"f": "gamma*nu"}},
            },
            {
                "label": "ii",
                "parameters": ("nu",),
                "invertible": ("gamma", "nu"),
                "pipeline": "thm315",
                "printed_r": _OMEGA_3_11_II_PRINTED,
                "r": _OMEGA_3_11_II,
                "expect_failures": ("eq24",),
                "erratum": (
                    "printed off-diagonal entries fail the Yang-Baxter condition for the induced bracket; "
                    "with their sign flipped r solves it and only the cosymplectic condition fails"
                ),
            },
        ),
    },
    {
        "id": "ex-3.16/2",
        "coalgebra": "q2",
        "parameters": ("lambda",),
        "omega": [("lambda", "e", "e"), ("-lambda", "e", "f"), ("-lambda", "f", "e"), ("lambda", "f", "f")],
        "bracket": {("e", "f"): {"e": "lambda", "f": "lambda"}, ("f", "e"): {"e": "-lambda", "f": "-lambda"}},
        "cases": (
            {
                "label": "i",
                "parameters": ("gamma",),
                "pipeline": "thm315",
                "r": [("gamma", "f", "f")],
                "operator": {"e": {"f": "-lambda*gamma"}, "f": {"f": "lambda*gamma"}},
            },
        ),
    },
)
