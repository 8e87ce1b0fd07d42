package surgery.other;

public class Helper {
    public int pad(int width) {
        return width + 1;
    }
}
