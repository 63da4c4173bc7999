"""Table-driven arithmetic in GF(p^n).

Elements are plain ints; digit i in base p is the coefficient of x^i.
"""
from cdifflab import GF, FieldSpec

F = FieldSpec.aes()
print(F)
print("0x57 * 0x83 =", hex(F.mul(0x57, 0x83)))           # 0xc1
print("inverse of 0x53 =", hex(F.inv(0x53)))               # 0xca
print("Tr(0x53) =", F.trace(0x53), " order =", F.order(0x53))

# odd characteristic works the same way
K = GF(3, 4)
x = K.element(17)
print(f"\nin {K}: x = {x}, x^80 = {x ** 80}, x * x^-1 = {x * x.inverse()}")
print("is -1 a 4th power?", K.kth_power_test(K.neg(1), 4))

# arrays are accepted everywhere
xs = F.elements()
print("\nnumber of trace-zero elements in GF(2^8):", int((F.trace(xs) == 0).sum()))
