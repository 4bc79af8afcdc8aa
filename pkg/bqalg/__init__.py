"""Biquaternion divisors of zero, idempotents and nilpotents"""
