"""图代数 𝒢ₖ 与映射代数 𝒜ₖ，以及秩定理和各引理的计算校验。"""
