"""Symbolic chain-of-thought reasoning: a four-stage LLM pipeline
(translate, plan, solve, verify) backed by a first-order logic core, a
forward-chaining engine, a constraint solver, and an evaluation harness."""

__version__ = "0.1.0"
