#pragma once

// Generated by compute_oracles.py (mpmath / exact integers / brute-force scans).

#include <cstdint>
#include <utility>

namespace oracle {

inline constexpr double kZeta[][4] = {
    {2.0, 0.0, 1.6449340668482264, 0.0},
    {1.0, 1.0, 0.5821580597520036, -0.9268485643308071},
    {1.0, 10.0, 1.3902873132374014, -0.10978515306630206},
    {1.0, 100.0, 1.632833506686712, -0.0681312038418125},
    {1.0, 1000.0, 0.9409368682927534, 0.0452266520720951},
    {1.0, 12345.5, 0.9240782136192216, 0.33850702785450093},
    {1.5, 7.0, 1.0252831987529303, 0.23053376151897179},
    {1.01, 0.3, 0.6893688975496548, -3.307808966767828},
    {0.5, 14.0, 0.02224114260999359, -0.10325812326645006},
};
inline constexpr double kDirichletChi4[][4] = {
    {1.0, 0.0, 0.7853981633974483, 0.0},
    {1.0, 10.0, 0.6105256948955274, -0.2545345784579305},
    {2.0, 3.0, 1.1038914073266917, 0.013358289062820427},
    {1.0, 500.0, 1.688653833843392, -0.21039222988382306},
};
inline constexpr double kTheta[][4] = {
    {0.1, 0.0, 1.6527165556958578, 0.0},
    {1.0, 0.0, -0.000520325230213207, 0.0},
    {3.0, 0.0, -1.0986122893258152, 0.0},
    {0.3, 0.2, 1.026834038466061, -0.489192132411318},
    {0.0, 0.3, 1.9635100260214235, -1.0624515220959914},
    {2.0, 1.7, -0.9650356833345015, -0.7044944432208136},
};
inline constexpr std::pair<double, double> kPsi[] = {
    {0.05, 0.5800140039421161},
    {0.5, 0.6922980172027774},
    {1.0, 0.8158036900190135},
    {2.0, 1.0544028165278605},
    {5.0, 1.657095023795667},
    {20.0, 2.995740587295146},
};
inline constexpr double kLogAbsZetaDelta[][4] = {
    {1.0, 0.03, 0.1, 4.266179511833212},
    {1.02, -0.1, 0.3, 2.846044119133244},
    {1.0, 0.15, 0.4, 2.881908788749901},
    {1.3, 2.0, 0.2, -0.253561337134029},
};
inline constexpr double kSinKernelClosed = 0.06759071136536954;
inline constexpr double kInverseZetaNearPole01 = 0.0024997070011114754;
inline constexpr double kInverseZetaNearPole02 = 0.009995314037240507;
inline constexpr double kQuarticRootIntegral = 0.9517853479916015;
inline constexpr double kZetaL1T100 = 0.1634832512469338;
inline constexpr double kZetaL1T1000 = 0.2560460896481785;
inline constexpr double kTheorem3Zeta01 = 0.0023089095791854536;
inline constexpr double kTheorem3Inverse01 = 0.0014036487089172129;
inline constexpr double kWeight12Residue = 5.291630966586137;
inline constexpr double kPiCubedResidue = 8.704384046126545;
inline constexpr double kSatoTateAlpha = 0.8488263631567752;
inline constexpr std::pair<double, double> kSatoTateInverseCdf[] = {
    {0.1, 0.8133766726165733},
    {0.25, 1.1549407300050287},
    {0.5, 1.5707963267948966},
    {0.9, 2.32821598097322},
};
inline constexpr double kHeckeLocal[][4] = {
    {2, 1.3, -0.6418538861723947, 0.5622054907448657},
    {3, -0.4, -0.2186892009648295, 0.1381940329157279},
    {5, 2.0, -0.36464311358790924, 0.4462871026284195},
    {2, 0.0, -0.22314355131420976, 0.2876820724517809},
};
inline constexpr double kOnesLambda0P1000 = 0.1819183779462706;
inline constexpr double kOnesLambda1P1000 = -0.31565493470971917;
inline constexpr double kOnesFitWeightedAlpha = 1.0003950927685095;
inline constexpr double kOnesFitWeightedBeta = 0.5761377662772391;
inline constexpr double kOnesFitPrimeAlpha = 0.9946308142303947;
inline constexpr double kOnesFitPrimeBeta = 0.27500482059101883;
inline constexpr std::uint64_t kSplitMixSeed1[] = {
    10451216379200822465ULL, 13757245211066428519ULL, 17911839290282890590ULL, 8196980753821780235ULL,
};
inline constexpr std::int64_t kTau[] = {
    0LL, 1LL, -24LL, 252LL, -1472LL, 4830LL,
    -6048LL, -16744LL, 84480LL, -113643LL, -115920LL, 534612LL,
    -370944LL, -577738LL, 401856LL, 1217160LL, 987136LL, -6905934LL,
    2727432LL, 10661420LL, -7109760LL, -4219488LL, -12830688LL, 18643272LL,
    21288960LL, -25499225LL, 13865712LL, -73279080LL, 24647168LL, 128406630LL,
    -29211840LL, -52843168LL, -196706304LL, 134722224LL, 165742416LL, -80873520LL,
    167282496LL, -182213314LL, -255874080LL, -145589976LL, 408038400LL, 308120442LL,
    101267712LL, -17125708LL, -786948864LL, -548895690LL, -447438528LL, 2687348496LL,
    248758272LL, -1696965207LL, 611981400LL, -1740295368LL, 850430336LL, -1596055698LL,
    1758697920LL, 2582175960LL, -1414533120LL, 2686677840LL, -3081759120LL, -5189203740LL,
    -1791659520LL, 6956478662LL, 1268236032LL, 1902838392LL, 2699296768LL, -2790474540LL,
    -3233333376LL, -15481826884LL, 10165534848LL, 4698104544LL, 1940964480LL, 9791485272LL,
    -9600560640LL, 1463791322LL, 4373119536LL, -6425804700LL, -15693610240LL, -8951543328LL,
    3494159424LL, 38116845680LL, 4767866880LL, 1665188361LL, -7394890608LL, -29335099668LL,
    6211086336LL, -33355661220LL, 411016992LL, 32358470760LL, 45164021760LL, -24992917110LL,
    13173496560LL, 9673645072LL, -27442896384LL, -13316478336LL, -64496363904LL, 51494658600LL,
    -49569988608LL, 75013568546LL, 40727164968LL, -60754911516LL, 37534859200LL, 81742959102LL,
    41767088832LL, -225755128648LL, -48807306240LL, -20380127040LL, 38305336752LL, 90241258356LL,
    107866805760LL, 73482676310LL, -61972223040LL, -45917755128LL, -16528605184LL, -85146862638LL,
    -64480268160LL, 90047003760LL, -189014559360LL, 65655879534LL, 124540889760LL, 115632958896LL,
    102825676800LL, 498319933LL, -166955487888LL, 77646351384LL, 77785143296LL, -359001100500LL,
    -45668121408LL, -262717201024LL, 338071388160LL, -4315678416LL, 66971388960LL, 631528759932LL,
    -198311113728LL, -178514816480LL, 371563845216LL, -353937956400LL, -583413304320LL, -297198746214LL,
    -112754509056LL, 596793577940LL, 119045821440LL, 677211820992LL, -234995646528LL, -308865667656LL,
    -112181096448LL, 620204022900LL, -35130991728LL, -427635232164LL, 268217998208LL, -1115433620850LL,
    154219312800LL, -824447297848LL, 900676761600LL, 784811057562LL, 214837039872LL, -255232501440LL,
    214308444672LL, 1315116754406LL, -914804296320LL, -402206035896LL, -950091448320LL, -312162946368LL,
    -39964520664LL, -357832759588LL, -453553290624LL, 650708341920LL, 704042392032LL, 2754833892216LL,
    -356462346240LL, -1458379197393LL, 800535869280LL, -1211595753060LL, 25209042176LL, -950387449578LL,
    -776603298240LL, 426959023400LL, 527734751232LL, -1307679342480LL, 599830010640LL, 1681384224780LL,
    807974455680LL, -996774496018LL, -232167481728LL, 1753032622824LL, 1574983618560LL, -880090306620LL,
    319595480064LL, -3691995187608LL, -3955776986112LL, 1226984915520LL, -1235871806400LL, 2762403350592LL,
    680222785536LL, 5442387685442LL, -1800325645104LL, -703199584080LL, 2497932784704LL, -2876091504354LL,
    1458117876384LL, 728391402200LL, -2154174528000LL, -3901420374768LL, -1961831018448LL, -2150040612720LL,
    2561714781696LL, 1488221734860LL, 5418123087552LL, -2118677359896LL, -570305978368LL, 5699723069040LL,
    489123048960LL, -6793168439188LL, 2349393987456LL, 2467454288544LL, -2165790200544LL, -82717169640LL,
    -6190616678400LL, 884806004992LL, -1763584231440LL, 368875413144LL, -3800963013120LL, 3989820497292LL,
    1102026123072LL, 7334863021472LL, 3293650354176LL, 2897808426675LL, 2043524703312LL, -1359839565924LL,
    -3954789780480LL, -11824411223170LL, -2161128090240LL, -2255788918656LL, 10847792102400LL, -17563353448518LL,
    -1575741108816LL, 12979893235680LL, 7638507905280LL, 9605445111360LL, -2775191013504LL, -7139577462960LL,
    1201502453760LL, -231306909358LL, -11959678392LL, 13400796651732LL, -10239936590464LL, -8196341949810LL,
    -1863512433216LL, -6159507467960LL, -4464190832640LL, -7392445116336LL, 8616026412000LL, 12983053545252LL,
    -2800978113024LL, 9966916930464LL, 6305212824576LL, -8405626627440LL, -13641873096704LL, 23961192565506LL,
    103576281984LL, 3050979729616LL, 4107578522880LL, -14592514653090LL, -15156690238368LL, -24273728464488LL,
    11381333483520LL, -7708949021340LL, 4284355595520LL, -6298215111720LL, 22789249173248LL, 25837706543670LL,
    8494510953600LL, -3767932360528LL, -6817096065024LL, 2437758558144LL, 7132769909136LL, -13632191675700LL,
    -6915609888768LL, -16418932005874LL, -14323045870560LL, 6005256141024LL, -6832194969600LL, 21035722907082LL,
    -16253083703808LL, 16713176326532LL, -14413066320384LL, 12976653967200LL, 7412776023744LL, -5159168680848LL,
    22354294505472LL, 13420028104723LL, -14884896549600LL, 18903419273592LL, -2154700825984LL, -23926858987458LL,
    10263245571936LL, -25063854064200LL, -15393380766720LL, -39175875516960LL, 26770406900400LL, -10770926678736LL,
    9458784518400LL,
};
inline constexpr const char* kTau9973 = "-808737643658836893778";
inline constexpr const char* kTau10000 = "-482606811957501440000";
inline constexpr int kDeligneViolations10000 = 0;

}  // namespace oracle

