"""Exact computation with twisted group rings of finite groups over number rings."""
