"""Self-supervised degradation learning for lithium-ion battery health.

Pipelines: synthetic fleet generation, adaptive spectral detrending of
voltage traces, a convolutional embedding network feeding a transformer
encoder that emits one health indicator per cycle, pairwise-ranking
training, evaluation/ablation protocols, and capacity-regression transfer.
"""

__version__ = "0.1.0"
