"""HTTP service exposing the solver pipeline."""
