"""请求级中间件。"""
