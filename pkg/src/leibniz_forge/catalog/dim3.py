"""Three-dimensional Leibniz algebras and their symmetric r-matrix families.

Same layout as the two-dimensional module. Algebras with a structure
parameter ``alpha`` declare it (nonzero) and every family on them inherits
it unless the row pins it through ``fixed``. ``constraints`` holds the
printed side conditions verbatim; only ``invertible`` and ``relations`` enter
the symbolic verification.
"""

ALGEBRAS = {
    "1": {
        "basis": ("e", "f", "g"),
        "bracket": {
            ("f", "f"): {"e": "1"},
            ("f", "g"): {"f": "1"},
            ("g", "e"): {"e": "-2"},
            ("g", "f"): {"f": "-1"},
        },
    },
    "2": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "e"): {"e": "1", "f": "1"}, ("g", "g"): {"e": "1"}},
    },
    "3": {
        "basis": ("e", "f", "g"),
        "parameters": ("alpha",),
        "invertible": ("alpha",),
        "constraints": ("alpha != 0",),
        "bracket": {("f", "g"): {"f": "1"}, ("g", "e"): {"e": "alpha"}, ("g", "f"): {"f": "-1"}},
    },
    "4": {
        "basis": ("e", "f", "g"),
        "bracket": {("f", "g"): {"f": "1"}, ("g", "f"): {"f": "-1"}, ("g", "g"): {"e": "1"}},
    },
    "5": {
        "basis": ("e", "f", "g"),
        "bracket": {("f", "f"): {"e": "1"}, ("g", "g"): {"e": "1"}},
    },
    "6": {
        "basis": ("e", "f", "g"),
        "bracket": {("f", "f"): {"e": "1"}, ("g", "g"): {"e": "-1"}},
    },
    "7": {
        "basis": ("e", "f", "g"),
        "parameters": ("alpha",),
        "invertible": ("alpha",),
        "constraints": ("alpha != 0",),
        "bracket": {("f", "f"): {"e": "1"}, ("g", "f"): {"e": "1"}, ("g", "g"): {"e": "alpha"}},
    },
    "8": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "f"): {"e": "1"}},
    },
    "9": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "e"): {"f": "1"}, ("g", "f"): {"e": "1"}},
    },
    "10": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "e"): {"f": "1"}, ("g", "f"): {"e": "-1"}},
    },
    "11": {
        "basis": ("e", "f", "g"),
        "parameters": ("alpha",),
        "invertible": ("alpha",),
        "constraints": ("alpha != 0",),
        "bracket": {("g", "e"): {"f": "1"}, ("g", "f"): {"e": "alpha", "f": "1"}},
    },
    "12": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "e"): {"f": "1"}, ("g", "g"): {"e": "1"}},
    },
    "13": {
        "basis": ("e", "f", "g"),
        "bracket": {("g", "e"): {"e": "1"}, ("g", "f"): {"f": "1"}},
    },
}

FAMILIES = (
    {
        "id": "dim3-1/r1",
        "algebra": "1",
        "parameters": ("lambda",),
        "r": [("lambda", "g", "g")],
        "coproduct": {
            "e": [("-2*lambda", "e", "g"), ("2*lambda", "g", "e")],
            "f": [("lambda", "g", "f")],
        },
    },
    {
        "id": "dim3-1/r2",
        "algebra": "1",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "g"), ("-gamma", "f", "f"), ("gamma", "g", "e")],
        "coproduct": {
            "f": [("-gamma", "e", "f"), ("gamma", "f", "e")],
            "g": [("-2*lambda", "e", "e"), ("-2*gamma", "e", "g"), ("gamma", "f", "f")],
        },
    },
    {
        "id": "dim3-1/r3",
        "algebra": "1",
        "parameters": ("lambda",),
        "r": [("lambda", "e", "f"), ("lambda", "f", "e")],
        "coproduct": {
            "f": [("-lambda", "e", "e")],
            "g": [("-3*lambda", "e", "f")],
        },
    },
    {
        "id": "dim3-1/r4",
        "algebra": "1",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "g"), ("gamma", "g", "e")],
        "coproduct": {
            "f": [("gamma", "e", "f")],
            "g": [("-2*lambda", "e", "e"), ("-2*gamma", "e", "g")],
        },
    },
    {
        "id": "dim3-2/r1",
        "algebra": "2",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("lambda", "e", "e"), ("gamma", "e", "f"), ("lambda", "f", "e"), ("gamma", "f", "f")],
        },
    },
    {
        "id": "dim3-2/r2",
        "algebra": "2",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "f"), ("lambda", "f", "e"), ("gamma", "f", "f"), ("-lambda", "f", "g"), ("-lambda", "g", "f")],
        "coproduct": {
            "e": [("-lambda", "e", "f"), ("lambda", "f", "e")],
            "g": [("-lambda", "e", "f"), ("lambda", "f", "e"), ("2*lambda", "f", "f")],
        },
    },
    {
        "id": "dim3-3/r1",
        "algebra": "3",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("nu", "g", "e")],
        "coproduct": {
            "f": [("nu", "e", "f")],
            "g": [("alpha*lambda", "e", "e"), ("gamma*(alpha - 1) + nu", "e", "f"), ("alpha*nu", "e", "g")],
        },
    },
    {
        "id": "dim3-3/r2",
        "algebra": "3",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "f"), ("lambda", "f", "e"), ("gamma", "g", "g")],
        "coproduct": {
            "e": [("alpha*gamma", "e", "g"), ("-alpha*gamma", "g", "e")],
            "f": [("gamma", "g", "f")],
            "g": [("lambda*(alpha - 1)", "e", "f")],
        },
    },
    {
        "id": "dim3-3/r3",
        "algebra": "3",
        "parameters": ("lambda", "gamma", "nu"),
        "invertible": ("gamma",),
        "r": [("lambda", "e", "f"), ("lambda", "f", "e"), ("gamma", "f", "f"), ("nu", "f", "g"), ("nu", "g", "f"), ("nu^2/gamma", "g", "g")],
        "coproduct": {
            "e": [("alpha*nu", "e", "f"), ("alpha*nu^2/gamma", "e", "g"), ("-alpha*nu", "f", "e"), ("-alpha*nu^2/gamma", "g", "e")],
            "f": [("nu", "f", "f"), ("nu^2/gamma", "g", "f")],
            "g": [("lambda*(alpha - 1)", "e", "f"), ("-gamma", "f", "f"), ("-nu", "g", "f")],
        },
    },
    {
        "id": "dim3-3/r4",
        "algebra": "3",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("alpha*lambda", "e", "e"), ("gamma*(alpha - 1)", "e", "f"), ("-nu", "f", "f")],
        },
    },
    {
        "id": "dim3-4/r1",
        "algebra": "4",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("-gamma", "e", "f"), ("-nu", "f", "f")],
        },
    },
    {
        "id": "dim3-4/r2",
        "algebra": "4",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("nu", "g", "e")],
        "coproduct": {
            "f": [("nu", "e", "f")],
            "g": [("nu", "e", "e"), ("-gamma", "e", "f")],
        },
    },
    {
        "id": "dim3-5/r1",
        "algebra": "5",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("nu", "g", "e")],
        "coproduct": {
            "f": [("gamma", "e", "e")],
            "g": [("nu", "e", "e")],
        },
    },
    {
        "id": "dim3-6/r1",
        "algebra": "6",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("nu", "g", "e")],
        "coproduct": {
            "f": [("gamma", "e", "e")],
            "g": [("-nu", "e", "e")],
        },
    },
    {
        "id": "dim3-6/r2",
        "algebra": "6",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "e", "g"), ("gamma", "f", "e"), ("nu", "f", "f"), ("nu", "f", "g"), ("gamma", "g", "e"), ("nu", "g", "f"), ("nu", "g", "g")],
        "coproduct": {
            "f": [("gamma", "e", "e"), ("2*nu", "e", "f"), ("2*nu", "e", "g"), ("-nu", "f", "e"), ("-nu", "g", "e")],
            "g": [("-gamma", "e", "e"), ("-2*nu", "e", "f"), ("-2*nu", "e", "g"), ("nu", "f", "e"), ("nu", "g", "e")],
        },
    },
    {
        "id": "dim3-6/r3",
        "algebra": "6",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("-gamma", "e", "g"), ("gamma", "f", "e"), ("nu", "f", "f"), ("-nu", "f", "g"), ("-gamma", "g", "e"), ("-nu", "g", "f"), ("nu", "g", "g")],
        "coproduct": {
            "f": [("gamma", "e", "e"), ("2*nu", "e", "f"), ("-2*nu", "e", "g"), ("-nu", "f", "e"), ("nu", "g", "e")],
            "g": [("gamma", "e", "e"), ("2*nu", "e", "f"), ("-2*nu", "e", "g"), ("-nu", "f", "e"), ("nu", "g", "e")],
        },
    },
    {
        "id": "dim3-7/r1",
        "algebra": "7",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("nu", "g", "e")],
        "coproduct": {
            "f": [("gamma", "e", "e")],
            "g": [("alpha*nu + gamma", "e", "e")],
        },
    },
    {
        "id": "dim3-7/r2",
        "algebra": "7",
        "parameters": ("lambda", "gamma", "nu", "kappa"),
        "invertible": ("nu", "kappa"),
        "relations": ("nu^2 = -nu*kappa - alpha*kappa^2",),
        "constraints": ("nu != 0", "alpha != 0", "alpha <= 1/4", "nu = (-1 +/- sqrt(1 - 4*alpha))/2 * kappa"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma*kappa/nu", "e", "g"), ("gamma", "f", "e"), ("-alpha*kappa - nu", "f", "f"), ("nu", "f", "g"), ("gamma*kappa/nu", "g", "e"), ("nu", "g", "f"), ("kappa", "g", "g")],
        "coproduct": {
            "f": [("gamma", "e", "e"), ("-2*alpha*kappa - nu", "e", "f"), ("kappa + 2*nu", "e", "g"), ("alpha*kappa", "f", "e"), ("-kappa - nu", "g", "e")],
            "g": [("gamma*(alpha*kappa + nu)/nu", "e", "e"), ("-alpha*kappa + 2*alpha*nu - nu", "e", "f"), ("2*alpha*kappa + nu", "e", "g"), ("-alpha*nu", "f", "e"), ("-alpha*kappa", "g", "e")],
        },
    },
    {
        "id": "dim3-8/r1",
        "algebra": "8",
        "parameters": ("lambda", "gamma", "nu", "kappa"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma", "f", "e"), ("kappa", "f", "f"), ("nu", "g", "e")],
        "coproduct": {
        },
    },
    {
        "id": "dim3-8/r2",
        "algebra": "8",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "g", "g")],
        "coproduct": {
            "f": [("nu", "e", "g"), ("-nu", "g", "e")],
        },
    },
    {
        "id": "dim3-9/r1",
        "algebra": "9",
        "parameters": ("lambda",),
        "r": [("lambda", "g", "g")],
        "coproduct": {
            "e": [("lambda", "f", "g"), ("-lambda", "g", "f")],
            "f": [("lambda", "e", "g"), ("-lambda", "g", "e")],
        },
    },
    {
        "id": "dim3-9/r2",
        "algebra": "9",
        "parameters": ("lambda", "nu"),
        "r": [("lambda", "e", "e"), ("-lambda", "e", "f"), ("nu", "e", "g"), ("-lambda", "f", "e"), ("lambda", "f", "f"), ("-nu", "f", "g"), ("nu", "g", "e"), ("-nu", "g", "f")],
        "coproduct": {
            "e": [("-nu", "e", "f"), ("nu", "f", "e")],
            "f": [("-nu", "e", "f"), ("nu", "f", "e")],
            "g": [("-lambda", "e", "e"), ("lambda", "e", "f"), ("-nu", "e", "g"), ("lambda", "f", "e"), ("-lambda", "f", "f"), ("nu", "f", "g")],
        },
    },
    {
        "id": "dim3-9/r3",
        "algebra": "9",
        "parameters": ("lambda",),
        "r": [("lambda", "e", "g"), ("lambda", "f", "g"), ("lambda", "g", "e"), ("lambda", "g", "f")],
        "coproduct": {
            "e": [("-lambda", "e", "f"), ("lambda", "f", "e")],
            "f": [("lambda", "e", "f"), ("-lambda", "f", "e")],
            "g": [("lambda", "e", "g"), ("lambda", "f", "g")],
        },
    },
    {
        "id": "dim3-9/r4",
        "algebra": "9",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("gamma", "e", "e"), ("nu", "e", "f"), ("lambda", "f", "e"), ("gamma", "f", "f")],
        },
    },
    {
        "id": "dim3-10/r1",
        "algebra": "10",
        "parameters": ("lambda",),
        "r": [("lambda", "g", "g")],
        "coproduct": {
            "e": [("lambda", "f", "g"), ("-lambda", "g", "f")],
            "f": [("-lambda", "e", "g"), ("lambda", "g", "e")],
        },
    },
    {
        "id": "dim3-10/r2",
        "algebra": "10",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("-gamma", "e", "e"), ("-nu", "e", "f"), ("lambda", "f", "e"), ("gamma", "f", "f")],
        },
    },
    {
        "id": "dim3-11/r1",
        "algebra": "11",
        "parameters": ("lambda",),
        "r": [("lambda", "g", "g")],
        "coproduct": {
            "e": [("lambda", "f", "g"), ("-lambda", "g", "f")],
            "f": [("alpha*lambda", "e", "g"), ("lambda", "f", "g"), ("-alpha*lambda", "g", "e"), ("-lambda", "g", "f")],
        },
    },
    {
        "id": "dim3-11/r2",
        "algebra": "11",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("alpha*gamma", "e", "e"), ("alpha*nu", "e", "f"), ("gamma + lambda", "f", "e"), ("gamma + nu", "f", "f")],
        },
    },
    {
        "id": "dim3-11/r3",
        "algebra": "11",
        "parameters": ("lambda", "gamma"),
        "relations": ("gamma^2 = -gamma*lambda + lambda^2",),
        "fixed": {"alpha": "1"},
        "constraints": ("alpha = 1", "gamma = (-1 +/- sqrt(5))/2 * lambda"),
        "r": [("gamma", "e", "g"), ("lambda", "f", "g"), ("gamma", "g", "e"), ("lambda", "g", "f")],
        "coproduct": {
            "e": [("-gamma", "e", "f"), ("gamma", "f", "e")],
            "f": [("-gamma + lambda", "e", "f"), ("gamma - lambda", "f", "e")],
            "g": [("lambda", "e", "g"), ("gamma + lambda", "f", "g")],
        },
    },
    {
        "id": "dim3-11/r4",
        "algebra": "11",
        "parameters": ("lambda", "gamma", "nu"),
        "invertible": ("lambda",),
        "relations": ("nu^2 = nu*lambda + lambda^2",),
        "fixed": {"alpha": "1"},
        "constraints": ("alpha = 1", "lambda != 0", "nu = (1 +/- sqrt(5))/2 * lambda"),
        "r": [("gamma + gamma*nu*(-2*lambda + nu)/lambda^2", "e", "e"), ("-gamma + gamma*nu/lambda", "e", "f"), ("lambda", "e", "g"), ("-gamma + gamma*nu/lambda", "f", "e"), ("gamma", "f", "f"), ("nu", "f", "g"), ("lambda", "g", "e"), ("nu", "g", "f")],
        "coproduct": {
            "e": [("-lambda", "e", "f"), ("lambda", "f", "e")],
            "f": [("-lambda + nu", "e", "f"), ("lambda - nu", "f", "e")],
            "g": [("gamma*(-lambda + nu)/lambda", "e", "e"), ("gamma", "e", "f"), ("nu", "e", "g"), ("gamma*nu*(-lambda + nu)/lambda", "f", "e"), ("gamma*nu/lambda", "f", "f"), ("lambda + nu", "f", "g")],
        },
    },
    {
        "id": "dim3-12/r1",
        "algebra": "12",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("lambda", "f", "e"), ("gamma", "f", "f")],
        },
    },
    {
        "id": "dim3-13/r1",
        "algebra": "13",
        "parameters": ("lambda",),
        "r": [("lambda", "g", "g")],
        "coproduct": {
            "e": [("lambda", "e", "g"), ("-lambda", "g", "e")],
            "f": [("lambda", "f", "g"), ("-lambda", "g", "f")],
        },
    },
    {
        "id": "dim3-13/r2",
        "algebra": "13",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "g"), ("gamma", "g", "e")],
        "coproduct": {
            "f": [("-gamma", "e", "f"), ("gamma", "f", "e")],
            "g": [("lambda", "e", "e"), ("gamma", "e", "g")],
        },
    },
    {
        "id": "dim3-13/r3",
        "algebra": "13",
        "parameters": ("lambda", "gamma", "nu"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        "coproduct": {
            "g": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e"), ("nu", "f", "f")],
        },
    },
    {
        "id": "dim3-13/r4",
        "algebra": "13",
        "parameters": ("lambda", "gamma", "nu", "kappa"),
        "invertible": ("kappa",),
        "r": [("gamma*lambda/kappa", "e", "e"), ("gamma*nu/kappa", "e", "f"), ("gamma", "e", "g"), ("gamma*nu/kappa", "f", "e"), ("nu", "f", "f"), ("kappa", "f", "g"), ("gamma", "g", "e"), ("kappa", "g", "f")],
        "coproduct": {
            "e": [("kappa", "e", "f"), ("-kappa", "f", "e")],
            "f": [("-gamma", "e", "f"), ("gamma", "f", "e")],
            "g": [("gamma*lambda/kappa", "e", "e"), ("gamma*nu/kappa", "e", "f"), ("gamma", "e", "g"), ("gamma*nu/kappa", "f", "e"), ("nu", "f", "f"), ("kappa", "f", "g")],
        },
    },)
