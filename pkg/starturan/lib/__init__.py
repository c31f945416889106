from .oracles import (
    GraphStarOracle,
    FixedPairOracle,
    ZeroOracle,
    CallableOracle,
    default_oracle,
)
from .constructions import (
    ConstructionReport,
    expansion_witness,
    linear_witness,
    regular_uniform,
    berge_regular_witness,
    berge_block_witness,
    best_witness,
    index_range,
    WITNESS_FAMILIES,
)
