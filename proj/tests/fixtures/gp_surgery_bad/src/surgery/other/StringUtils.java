package surgery.other;

public class StringUtils {
    private Helper helper;

    public StringUtils() {
        this.helper = new Helper();
    }

    public int measure(int width) {
        return helper.pad(width);
    }
}
