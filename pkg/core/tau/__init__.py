from core.tau.calculus import (
    MoebiusShift,
    from_shift_frame,
    partial_d,
    same_orbit,
    sigma,
    tau_apply,
    tau_inverse,
    tau_power,
    to_shift_frame,
)

__all__ = [
    "MoebiusShift",
    "from_shift_frame",
    "partial_d",
    "same_orbit",
    "sigma",
    "tau_apply",
    "tau_inverse",
    "tau_power",
    "to_shift_frame",
]
