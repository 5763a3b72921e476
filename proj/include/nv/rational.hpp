/*!
  \file rational.hpp
  \brief Arbitrary-precision naturals and exact rationals.

  Every rational produced by this library has a denominator of the form
  k^e for a single-digit base k, so reduction only ever needs the small
  prime factors 2, 3, 5, 7.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nv
{

/*! Unsigned arbitrary-precision integer, base 2^32 limbs. */
class bignat
{
public:
  bignat() = default;

  explicit bignat( std::uint64_t v )
  {
    while ( v != 0 )
    {
      limbs_.push_back( static_cast<std::uint32_t>( v & 0xffffffffu ) );
      v >>= 32;
    }
  }

  static bignat one() { return bignat( 1 ); }

  bool is_zero() const { return limbs_.empty(); }

  bool operator==( bignat const& o ) const = default;

  int compare( bignat const& o ) const
  {
    if ( limbs_.size() != o.limbs_.size() )
      return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for ( std::size_t i = limbs_.size(); i-- > 0; )
    {
      if ( limbs_[i] != o.limbs_[i] )
        return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
  }

  bool operator<( bignat const& o ) const { return compare( o ) < 0; }
  bool operator<=( bignat const& o ) const { return compare( o ) <= 0; }

  bignat& operator+=( bignat const& o )
  {
    std::uint64_t carry = 0;
    std::size_t const n = std::max( limbs_.size(), o.limbs_.size() );
    limbs_.resize( n, 0 );
    for ( std::size_t i = 0; i < n; ++i )
    {
      std::uint64_t s = carry + limbs_[i] + ( i < o.limbs_.size() ? o.limbs_[i] : 0 );
      limbs_[i] = static_cast<std::uint32_t>( s & 0xffffffffu );
      carry = s >> 32;
    }
    if ( carry != 0 )
      limbs_.push_back( static_cast<std::uint32_t>( carry ) );
    return *this;
  }

  bignat operator+( bignat const& o ) const
  {
    bignat r = *this;
    r += o;
    return r;
  }

  bignat& mul_small( std::uint32_t m )
  {
    if ( m == 0 )
    {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for ( auto& l : limbs_ )
    {
      std::uint64_t p = std::uint64_t( l ) * m + carry;
      l = static_cast<std::uint32_t>( p & 0xffffffffu );
      carry = p >> 32;
    }
    if ( carry != 0 )
      limbs_.push_back( static_cast<std::uint32_t>( carry ) );
    return *this;
  }

  /*! Divides in place; returns the remainder. */
  std::uint32_t div_small( std::uint32_t d )
  {
    std::uint64_t rem = 0;
    for ( std::size_t i = limbs_.size(); i-- > 0; )
    {
      std::uint64_t cur = ( rem << 32 ) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>( cur / d );
      rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>( rem );
  }

  bool divisible_by( std::uint32_t d ) const
  {
    std::uint64_t rem = 0;
    for ( std::size_t i = limbs_.size(); i-- > 0; )
      rem = ( ( rem << 32 ) | limbs_[i] ) % d;
    return rem == 0;
  }

  bignat operator*( bignat const& o ) const
  {
    if ( is_zero() || o.is_zero() )
      return {};
    bignat r;
    r.limbs_.assign( limbs_.size() + o.limbs_.size(), 0 );
    for ( std::size_t i = 0; i < limbs_.size(); ++i )
    {
      std::uint64_t carry = 0;
      for ( std::size_t j = 0; j < o.limbs_.size(); ++j )
      {
        std::uint64_t cur = std::uint64_t( limbs_[i] ) * o.limbs_[j] + r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>( cur & 0xffffffffu );
        carry = cur >> 32;
      }
      r.limbs_[i + o.limbs_.size()] += static_cast<std::uint32_t>( carry );
    }
    r.trim();
    return r;
  }

  static bignat pow( std::uint32_t base, std::uint64_t exp )
  {
    bignat r = one();
    for ( std::uint64_t i = 0; i < exp; ++i )
      r.mul_small( base );
    return r;
  }

  std::string to_string() const
  {
    if ( is_zero() )
      return "0";
    bignat tmp = *this;
    std::string digits;
    while ( !tmp.is_zero() )
      digits.push_back( static_cast<char>( '0' + tmp.div_small( 10 ) ) );
    return { digits.rbegin(), digits.rend() };
  }

private:
  void trim()
  {
    while ( !limbs_.empty() && limbs_.back() == 0 )
      limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

/*! Exact non-negative rational, kept in lowest terms. */
class rational
{
public:
  rational() : num_( 0 ), den_( 1 ) {}

  rational( bignat num, bignat den ) : num_( std::move( num ) ), den_( std::move( den ) )
  {
    if ( den_.is_zero() )
      throw std::invalid_argument( "rational: zero denominator" );
    reduce();
  }

  static rational zero() { return {}; }
  static rational one() { return { bignat::one(), bignat::one() }; }

  //! k^{-e}
  static rational inverse_power( std::uint32_t base, std::uint64_t e )
  {
    return { bignat::one(), bignat::pow( base, e ) };
  }

  bignat const& num() const { return num_; }
  bignat const& den() const { return den_; }

  bool operator==( rational const& o ) const = default;

  bool is_one() const { return num_ == den_; }

  rational operator+( rational const& o ) const
  {
    return { num_ * o.den_ + o.num_ * den_, den_ * o.den_ };
  }

  rational operator*( rational const& o ) const
  {
    return { num_ * o.num_, den_ * o.den_ };
  }

  int compare( rational const& o ) const { return ( num_ * o.den_ ).compare( o.num_ * den_ ); }
  bool operator<( rational const& o ) const { return compare( o ) < 0; }
  bool operator<=( rational const& o ) const { return compare( o ) <= 0; }

  std::string to_string() const
  {
    if ( den_ == bignat::one() )
      return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

private:
  void reduce()
  {
    if ( num_.is_zero() )
    {
      den_ = bignat::one();
      return;
    }
    // denominators are k-smooth for k <= 10
    for ( std::uint32_t p : { 2u, 3u, 5u, 7u } )
    {
      while ( num_.divisible_by( p ) && den_.divisible_by( p ) )
      {
        num_.div_small( p );
        den_.div_small( p );
      }
    }
  }

  bignat num_;
  bignat den_;
};

} // namespace nv
