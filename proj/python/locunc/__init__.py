from ._locunc import (
    Error,
    Instance,
    ParseError,
    adr_bound,
    adr_model,
    certify,
    cmax,
    eval_c,
    eval_c_bruteforce,
    gen_format,
    gen_planar_roadnet,
    gen_tight_clique,
    gen_tight_cycle,
    gen_tight_path,
    gen_tight_star,
    load_instance,
    parse_instance,
    robust_sp,
    solve,
)

__all__ = [
    "Error",
    "Instance",
    "ParseError",
    "adr_bound",
    "adr_model",
    "certify",
    "cmax",
    "eval_c",
    "eval_c_bruteforce",
    "gen_format",
    "gen_planar_roadnet",
    "gen_tight_clique",
    "gen_tight_cycle",
    "gen_tight_path",
    "gen_tight_star",
    "load_instance",
    "parse_instance",
    "robust_sp",
    "solve",
]
