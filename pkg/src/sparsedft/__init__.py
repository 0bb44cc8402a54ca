"""Series sums and discrete Fourier transforms from a few weighted samples.

The sum ``sum_{n=n_a}^{n_b} f(n) exp(-ikn)`` is approximated by
``sum_j W_j(k) f(n_j) exp(-ikn_j)`` over an odd number of selected nodes,
with ``f`` replaced by a parabola on each three-node panel.
"""
from .errors import SparseDFTError
from .kernel import PanelWeights, YTriple, panel_sum, panel_weights, y_triple
from .nodes import (HybridSpec, QSequenceSpec, SplitSpec, hybrid_nodes, q_sequence,
                    split_nodes)
from .oracle import ExactExample, brute_force_dft, exact_value, faulhaber
from .transform import (NodeSequence, SampledFunction, Segment, TransformResult,
                        WeightTable, assemble_weights, cosine_transform, dft,
                        piecewise_transform, series_sum, sine_transform)

__version__ = "0.1.0"
