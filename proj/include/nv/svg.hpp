/*!
  \file svg.hpp
  \brief SVG rendering of the rectangle tiling of a 2-dimensional code:
  tuple (u1, u2) is the rectangle [0.u1, 0.u1 + k^-|u1|) x [0.u2, ...).
*/

#pragma once

#include "code.hpp"

#include <cmath>
#include <sstream>

namespace nv
{

inline std::string tiling_svg( code_set const& P, int pixels = 512 )
{
  if ( P.sig().n != 2 )
    throw error( "WrongDimension", "tilings are rendered for n = 2 codes" );
  int const k = P.sig().k;
  auto base_value = [&]( std::string const& s ) {
    double v = 0.0, scale = 1.0;
    for ( char c : s )
    {
      scale /= k;
      v += ( c - '0' ) * scale;
    }
    return v;
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels << "\" height=\"" << pixels
      << "\" viewBox=\"0 0 " << pixels << " " << pixels << "\">\n";
  int idx = 0;
  for ( auto const& e : P )
  {
    double const x = base_value( e.coord( 0 ) );
    double const y = base_value( e.coord( 1 ) );
    double const w = std::pow( 1.0 / k, static_cast<double>( e.coord( 0 ).size() ) );
    double const h = std::pow( 1.0 / k, static_cast<double>( e.coord( 1 ).size() ) );
    int const hue = static_cast<int>( std::fmod( idx * 137.508, 360.0 ) );
    out << "  <rect x=\"" << x * pixels << "\" y=\"" << ( 1.0 - y - h ) * pixels << "\" width=\"" << w * pixels
        << "\" height=\"" << h * pixels << "\" fill=\"hsl(" << hue
        << ",60%,70%)\" stroke=\"black\" stroke-width=\"1\"><title>" << to_string( e ) << "</title></rect>\n";
    ++idx;
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace nv
