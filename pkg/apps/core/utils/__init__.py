"""无状态工具函数。"""
