"""zhulab: exact-arithmetic verification of constant-term identities,
creative-telescoping certificates, and Zhu/Poisson algebra dimensions."""

__version__ = "0.1.0"
