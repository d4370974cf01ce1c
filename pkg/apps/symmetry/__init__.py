"""孪生节点、自同构群与有序 k 元组上的轨道。"""
