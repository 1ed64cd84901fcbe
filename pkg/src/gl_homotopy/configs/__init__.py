"""Configs required to set up the gl_homotopy package"""
