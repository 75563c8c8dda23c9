"""Pick the right classifier for a tensor, factor and minor size."""

from __future__ import annotations

import warnings

from .errors import NotConciseWarning, UndefinedCollineation, ZeroTensor
from .ideals import implicitize, profile_scheme, saturate_irrelevant
from .nets import classify_net, label_from_image, sigma3_membership
from .pencils import classify_pencil
from .tensors import Tensor3, concise_reduce, linear_matrix, minor_ideal, span_basis, tensor_from_linear_matrix


def classify_tensor(T: Tensor3, factor: int = 1, k: int = 2) -> dict:
    """Report for the k-th collineation variety of ``T`` on ``factor``.

    Pencils (dimension 2 on ``factor``) use the gcd of minors, nets with
    ``k = 2`` use the base-scheme classification, anything else goes to
    implicitization. A ``label`` of ``Undefined`` carries a ``reason``.
    """
    if T.is_zero():
        raise ZeroTensor("cannot classify the zero tensor")
    core, flags = concise_reduce(T)
    if any(flags):
        warnings.warn(f"tensor reduced to its concise core {core.dims}", NotConciseWarning, stacklevel=2)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotConciseWarning)
        # move the chosen factor to the front, keeping the matrix layout of linear_matrix
        M = linear_matrix(core, factor)
        front = tensor_from_linear_matrix(M)
        n = front.dims[0]
        out = _classify_front(front, k, n)
    if T.dims == (3, 3, 3):
        out["sigma3"] = sigma3_membership(T)
    return out


def _undefined(reason: str) -> dict:
    return {"label": "Undefined", "span": None, "reason": reason}


def _classify_front(T: Tensor3, k: int, n: int) -> dict:
    rows, cols = T.dims[1], T.dims[2]
    if not 1 <= k <= min(rows, cols):
        return _undefined(f"k={k} is outside 1..{min(rows, cols)} for a {rows}x{cols} matrix")
    if n == 1:
        return {"label": "Point", "span": 1, "path": "trivial"}
    if n == 2:
        label = classify_pencil(T, k)
        if label.kind == "Undefined":
            return _undefined(label.reason)
        return {"label": label.name, "span": label.span, "path": "pencil"}
    if n == 3 and k == 2:
        try:
            return classify_net(T, 1).report()
        except UndefinedCollineation as exc:
            return _undefined(str(exc))
    I, ms = minor_ideal(linear_matrix(T, 1), k)
    basis = span_basis(ms)
    if not basis:
        return _undefined(f"all {k}x{k} minors vanish")
    profile, _ = profile_scheme(saturate_irrelevant(I))
    image = implicitize(basis)
    label = label_from_image(image)
    return {
        "label": label.name,
        "span": label.span,
        "base_locus": profile.as_dict(),
        "dimL": len(basis),
        "path": "oracle",
        "oracle": {"dim": image.hilbert.dim, "deg": image.hilbert.degree, "span": image.span_dim},
    }
