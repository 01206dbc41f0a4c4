"""Closed-form moment identities and congruences, stored as expression strings.

Symbols: n, M2..M14 (crank moments at n), N2..N14 (rank moments at n) and
p23 (the coefficient p_23(n-1) of q (q)_inf^23 at q^n). Each congruence is a
pair (modulus, expression) meaning expression(n) == 0 mod modulus.
"""

# N_{2k}(n) in terms of N_2, M_2..M_{2k} (and N_12 for the 14th moment)
MOMENT_IDENTITIES = {
    "N4": "2/3*(-3*n-1)*M2 + 8/3*M4 + (-12*n+1)*N2",
    "N6": ("2/33*(324*n**2+69*n-10)*M2 + 20/33*(-45*n+4)*M4 + 18/11*M6"
           " + (108*n**2-24*n+1)*N2"),
    "N8": ("2/913*(-72972*n**3-1728*n**2+5667*n-289)*M2"
           " + 280/913*(732*n**2-195*n+8)*M4 + 84/913*(-196*n+15)*M6 + 1248/913*M8"
           " + (-864*n**3+360*n**2-36*n+1)*N2"),
    "N10": ("2/5951847*(3588144480*n**4-805458600*n**3-398007108*n**2+56257647*n-1794592)*M2"
            " + 140/5951847*(-72270360*n**3+36826920*n**2-3625245*n+104002)*M4"
            " + 210/1983949*(1421544*n**2-380744*n+13519)*M6"
            " + 120/1983949*(-282435*n+18796)*M8 + 2724/2173*M10"
            " + (6480*n**4-4320*n**3+756*n**2-48*n+1)*N2"),
    "N14": ("1/4505033323132497*(-655918847016750354240*n**6 + 584104439765983424400*n**5"
            " - 88193910587689930464*n**4 - 51255985689606317364*n**3"
            " + 12889219681488512844*n**2 - 1033571808069319887*n + 23432656561492057)*M2"
            " + 364/4505033323132497*(2544016408481081520*n**5 - 2986029950270749200*n**4"
            " + 1233083592931144500*n**3 - 185464100558325420*n**2 + 12124758510318780*n"
            " - 229618708346923)*M4"
            " + 728/500559258125833*(-12932704022040180*n**4 + 11781511098477120*n**3"
            " - 3661921161131415*n**2 + 234233352768436*n - 7334109150929)*M6"
            " + 364/500559258125833*(3327634333443960*n**3 - 2184561928177200*n**2"
            " + 464283118670595*n - 12774042869566)*M8"
            " + 2002/6030834435251*(-758615153688*n**2 + 404700708960*n - 24122003839)*M10"
            " + 25388554464/2775349487*(n-1)*M12"
            " + 139497552/120667369*M14"
            " + 1/138*(-107775360*n**6 + 143700480*n**5 - 70752528*n**4 + 14978304*n**3"
            " - 1456488*n**2 + 64320*n - 1045)*N2"
            " + 91/138*(-36*n+13)*N12"),
}

P23_IDENTITY = (
    "1/897196601564928*(-57917897540518785552*n**5 + 30652078276547889552*n**4"
    " + 5952274737922797228*n**3 - 2214892612179680256*n**2 + 188772676333745691*n"
    " - 4410708034409819)*M2"
    " + 5/224299150391232*(4089872889595634400*n**4 - 3320629034843596140*n**3"
    " + 593555423164294752*n**2 - 40741028214970311*n + 815166233039851)*M4"
    " + 13/7120607948928*(-4612652508217680*n**3 + 2500384365901740*n**2"
    " - 190834728931028*n + 5730847932535)*M6"
    " + 65/24922127821248*(431597256867684*n**2 - 112947999359631*n + 3472477850182)*M8"
    " + 143/600533200512*(-555655003092*n + 33496841951)*M10"
    " + 16986177/1919176*M12"
    " + 24599722121/3316336128*(-46656*n**5 + 45360*n**4 - 12096*n**3 + 1296*n**2 - 60*n + 1)*N2"
    " - 24599722121/3316336128*N12"
)

# label -> (modulus, lhs - rhs)
MOMENT_CONGRUENCES = {
    "mod7_M4": (7, "(n+2)*M4 + (6*n**2+4*n+1)*M2"),
    "mod11_M4": (11, "(n+5)**3*M4 - (5*n**4+10*n**3+8*n**2+8*n+9)*M2"),
    "mod11_M6": (11, "M6 - 2*(n+7)*M4 + (n+8)**2*M2"),
    "mod11_M8": (11, "M8 - 2*(n+5)*(n**2+5*n+10)*M2 - 6*(n**2+n+1)*M4"),
    "mod41_M10": (41, "M10 - 4*(n+7)*(n**3+5*n**2+29*n+32)*M2 - 39*(n+7)*(n+14)*(n+39)*M4"
                      " - (6*n**2+34*n+39)*M6 - 35*(n+13)*M8"),
    "mod43_N12": (43, "(n+7)*(n+25)*(n+31)*(n**2+28*n+6)*N2 + N12"
                      " - (4*n**5+10*n**4+6*n**3+30*n**2+31*n+33)*M2"
                      " - (n**4+4*n**3+42*n**2+24*n+30)*M4 - 40*(n+10)*(n**2+32*n+7)*M6"
                      " - 31*(n+13)*(n+41)*M8 - (n+11)*M10 - 22*M12"),
    "mod53_M10": (53, "M10 - 36*(n+19)*(n**3+50*n**2+20*n+36)*M2"
                      " - (52*n**3+28*n**2+26*n+52)*M4 - (36*n**2+11*n+32)*M6 - 47*(n+17)*M8"),
    "mod83_M8": (83, "M8 - (10*n**3+73*n**2+40*n+82)*M2 - (72*n**2+23*n+28)*M4 - 10*(n+41)*M6"),
    "mod797_N12": (797, "N12 - 367*(n+332)*(n+487)*(n+664)*(n**2+265*n+155)*N2"
                        " - 352*(n+247)*(n+734)*(n**3+147*n**2+597*n+363)*M2"
                        " - 88*(n+530)*(n+701)*(n+709)*(n+740)*M4"
                        " - 577*(n+114)*(n+427)*(n+682)*M6 - (295*n**2+177*n+674)*M8"
                        " - 271*(n+336)*M10 - 654*M12"),
    "mod120667369_M14": (120667369,
                         "M14 - (44976165*n**6+23584476*n**5+19728425*n**4+8711555*n**3"
                         "+36781660*n**2+70780973*n+108798274)*M2"
                         " - 77429163*(n+4141548)*(n+113894720)*(n**3+42853554*n**2+28914352*n"
                         "+100598975)*M4"
                         " - (12571854*n**4+82951807*n**3+9501843*n**2+38248242*n+118847240)*M6"
                         " - 84218605*(n+53645347)*(n**2+6688335*n+93582728)*M8"
                         " - 73449678*(n+40889782)*(n+59666357)*M10"
                         " - 89188917*(n+120667368)*M12"),
}

# also printed with (2n+3) in place of 2(n+7); the two agree mod 11
MOD11_M6_ALT = (11, "M6 - (2*n+3)*M4 + (n+8)**2*M2")

# left side of the mod-23 congruence; its value is +-1 on the shifted
# pentagonal support and 0 elsewhere
P23_CONGRUENCE = (23, "4*(n**2+n+14)*(n**3+n**2+15)*M2 + (10*n**4+2*n**3+8*n**2+21*n+22)*M4"
                      " + 13*(n+18)*(n**2+21*n+13)*M6 + 5*n*(n+6)*M8 + 15*(n+19)*M10 + M12"
                      " + 12*(n+10)*(n+14)*(n+19)*(n+20)*(n+21)*N2 + N12")

# generating function of the mod-7 left side, as P times this polynomial in F1, F3, F5
MOD7_GENERATING_PHI = "-7/15*(180*F1*F3 - 30*F1**2 - 18*F5 - 35*F3 - 7*F1)"

# the mod-29 rank/crank residue-count congruence at 29n + 23: (k, weight) pairs
MOD29_RANK_WEIGHTS = ((0, 6), (1, 17), (2, 24), (3, 18), (4, 17), (5, 14), (6, 22), (7, 24),
                      (9, 2), (10, 15), (11, 19), (12, 18), (13, 20), (14, 16))
MOD29_CRANK_WEIGHTS = ((0, 11), (1, 17), (2, 28), (4, 26), (5, 6), (8, 28))

# the mod-11 rank residue-count congruence at 11n
MOD11_RANK_WEIGHTS = ((2, 2), (3, 1), (4, 7), (5, 1))
