#ifndef BESSEL_TESTS_REFERENCE_HPP_
#define BESSEL_TESTS_REFERENCE_HPP_

// Zeros j_{k,n} computed independently with mpmath.besseljzero at 30 digits.
namespace reference {

struct Zero {
  double k;
  int n;
  double value;
};

inline constexpr Zero kZeros[] = {
    {0, 1, 2.4048255576957727686}, {0, 2, 5.5200781102863106496}, {0, 3, 8.653727912911012217},
    {1, 1, 3.8317059702075123156}, {2, 1, 5.1356223018406825563}, {2, 2, 8.4172441403998648578},
    {2, 3, 11.619841172149059427}, {3, 1, 6.3801618959239835062}, {3, 2, 9.7610231299816696785},
    {3, 3, 13.01520072169843442},  {4, 1, 7.5883424345038043851}, {4, 2, 11.064709488501184883},
    {5, 1, 8.7714838159599540191}, {5, 2, 12.338604197466943986}, {6, 1, 9.9361095242176848947},
    {10, 1, 14.475500686554541238},
};

}  // namespace reference

#endif  // BESSEL_TESTS_REFERENCE_HPP_
