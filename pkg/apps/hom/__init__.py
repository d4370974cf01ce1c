"""同态计数引擎。"""
