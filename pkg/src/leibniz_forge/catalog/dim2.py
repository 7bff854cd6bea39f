"""Two-dimensional Leibniz algebras and their symmetric r-matrix families.

Coefficients are coefficient-expression strings over the row's parameters.
A bracket table maps ``(left, right)`` to the image; coproducts map a basis
label to a list of ``(coeff, left, right)`` terms; unlisted entries are zero.
"""

ALGEBRAS = {
    "a": {
        "basis": ("e", "f"),
        "bracket": {("f", "f"): {"e": "1"}},
    },
    "b": {
        "basis": ("e", "f"),
        "bracket": {("f", "e"): {"e": "1"}, ("f", "f"): {"e": "1"}},
    },
}

FAMILIES = (
    {
        "id": "dim2-a/r1",
        "algebra": "a",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e")],
        "coproduct": {
            "f": [("gamma", "e", "e")],
        },
    },
    {
        "id": "dim2-b/r1",
        "algebra": "b",
        "parameters": ("lambda", "gamma"),
        "r": [("lambda", "e", "e"), ("gamma", "e", "f"), ("gamma", "f", "e")],
        "coproduct": {
            "f": [("gamma + lambda", "e", "e"), ("gamma", "e", "f")],
        },
    },
    {
        "id": "dim2-b/r2",
        "algebra": "b",
        "parameters": ("lambda",),
        "r": [("lambda", "e", "e"), ("-lambda", "e", "f"), ("-lambda", "f", "e"), ("lambda", "f", "f")],
        "coproduct": {
            "e": [("lambda", "e", "f"), ("-lambda", "f", "e")],
            "f": [("lambda", "e", "f"), ("-lambda", "f", "e")],
        },
    },)
