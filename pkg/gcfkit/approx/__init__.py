"""Covering nets, independent oracles and the property suites built on them."""
