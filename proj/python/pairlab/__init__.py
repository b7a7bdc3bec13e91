"""Protocol lab for outsourced bilinear-pairing schemes over a transparent toy pairing.

The compiled core exposes the pairing instance, table provisioning, the
session runner for the three delegation protocols, the wiretap observer, and
the scenario engine used by the CLI.
"""

from pairlab._core import (
    CodecError,
    ConfigError,
    MalformedResponse,
    MalformedTranscript,
    PairingParams,
    PairlabError,
    ParamSearchError,
    RandTable,
    SessionResult,
    TableExhausted,
    eavesdrop_recover,
    generate_table,
    gt_inv,
    gt_mul,
    gt_pow,
    make_params,
    pair,
    params_from_q,
    run_scenario_file,
    run_session,
)

__all__ = [
    "CodecError",
    "ConfigError",
    "MalformedResponse",
    "MalformedTranscript",
    "PairingParams",
    "PairlabError",
    "ParamSearchError",
    "RandTable",
    "SessionResult",
    "TableExhausted",
    "eavesdrop_recover",
    "generate_table",
    "gt_inv",
    "gt_mul",
    "gt_pow",
    "make_params",
    "pair",
    "params_from_q",
    "run_scenario_file",
    "run_session",
]
