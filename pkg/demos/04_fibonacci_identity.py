"""Where Fibonacci numbers come in.

Summing the symmetric functions of the min matrix's eigenvalues over
all orders k gives an odd-indexed Fibonacci number:

    sum_{k=0}^{n} C(n+k, 2k) = F(2n+1)

The demo shows the first few rows of that sum and then pushes the
check into territory where the numbers have hundreds of digits.
"""

from minmatrix import fib, fibonacci_identity, symfun_closed

print(" n | terms                     | sum   | F(2n+1)")
print("---+---------------------------+-------+--------")
for n in range(7):
    terms = [symfun_closed(n, k) for k in range(n + 1)]
    total = sum(terms)
    print(f" {n} | {str(terms):25} | {total:5d} | {fib(2 * n + 1):5d}")

print("\nBig-integer check at n = 200:")
n = 200
total = sum(symfun_closed(n, k) for k in range(n + 1))
target = fib(2 * n + 1)
print(f"   F(401) has {len(str(target))} digits")
print(f"   sums match: {total == target}")

print("\nIdentity sweep for 0 <= n <= 200:",
      all(fibonacci_identity(n) for n in range(201)))
